//! One slow-drift trial with and without adaptation.
//!
//! `cargo run --release --example drift_adaptation -- [seed]`

use acl::adapt::AutoApprove;
use acl::harness::drift::{build_trial, run_drift, Components, DriftKind, DriftSettings};

fn main() -> acl::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let settings = DriftSettings::new(DriftKind::Slow);
    let setup = build_trial(&settings, seed)?;
    for c in Components::slow_set() {
        let trace = run_drift(&setup, &settings, c, &mut AutoApprove, true)?;
        let promotions = trace.cycles.iter().filter(|s| s.decision.map(|d| d.label()) == Some("promote")).count();
        println!("{} ({promotions} promotions)", c.label());
        for b in &trace.blocks {
            println!(
                "  t {:>2}-{:<2} from {:>4.0}°  accuracy {:.3}  confidence {:.3}{}",
                b.block_start,
                b.block_end,
                b.start_angle,
                b.accuracy,
                b.confidence,
                if b.alert { "  alert" } else { "" }
            );
        }
    }
    Ok(())
}
