//! A classifier trained on upright digits, evaluated slightly and heavily
//! rotated.

use acl::harness::ood::run_ood_trial;

fn main() -> acl::Result<()> {
    let r = run_ood_trial(11)?;
    println!("10-20°  accuracy {:.3}", r.near.accuracy());
    println!("90-120° accuracy {:.3}", r.far.accuracy());
    println!("\nconfusion at 90-120° (rows true, columns predicted)");
    print!("{}", r.far.to_csv());
    Ok(())
}
