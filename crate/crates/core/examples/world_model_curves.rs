//! Reconstruction loss against rotation for autoencoders trained on
//! different angle ranges.

use acl::harness::worldmodel_trials::{single_curve, WorldModelSettings, TRAINING_RANGES};
use acl::worldmodel::{coefficient_of_variation, spearman};

fn main() -> acl::Result<()> {
    let settings = WorldModelSettings::default();
    for range in TRAINING_RANGES {
        let curve = single_curve(range, &settings, 5)?;
        let means: Vec<f64> = curve.iter().map(|b| b.mean_loss).collect();
        let bins: Vec<f64> = (0..means.len()).map(|i| i as f64).collect();
        let row: Vec<String> = means.iter().map(|m| format!("{m:.4}")).collect();
        println!(
            "trained {:>3}-{:<3} | {} | cv {:.2} rho {:+.2}",
            range.0,
            range.1,
            row.join(" "),
            coefficient_of_variation(&curve),
            spearman(&bins, &means)
        );
    }
    Ok(())
}
