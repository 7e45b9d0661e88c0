//! Every combination of approval flags and standards run through the
//! promotion protocol.

use acl::experts::{evaluate_promotion, EvalReport, PromotionFlags, Standards};

fn main() -> acl::Result<()> {
    let s = Standards::default();
    println!("required approved maximizing cand_ok cur_ok better -> decision");
    for bits in 0u8..64 {
        let b = |i: u8| bits & (1 << i) != 0;
        let flags = PromotionFlags {
            human_approval_required: b(0),
            human_approved: b(1),
            performance_maximizing: b(2),
        };
        let conf = |ok| if ok { 0.8 } else { 0.1 };
        let cand = EvalReport::new(if b(5) { 0.95 } else { 0.75 }, conf(b(3)), &s, "val");
        let cur = EvalReport::new(0.85, conf(b(4)), &s, "val");
        let d = evaluate_promotion(&cand, &cur, &flags)?;
        println!(
            "{:>8} {:>8} {:>10} {:>7} {:>6} {:>6} -> {} {}",
            b(0),
            b(1),
            b(2),
            b(3),
            b(4),
            b(5),
            d.label(),
            d.reason()
        );
    }
    Ok(())
}
