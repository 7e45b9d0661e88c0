//! Trust vectors of one expert on familiar and unfamiliar inputs.

use acl::datagen::{sample_dataset, standard_splits, DomainSpec};
use acl::experts::{train_expert, ExpertConfig};
use acl::trust::compute_trust_vector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> acl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let splits = standard_splits(&DomainSpec::digits(0.0, 20.0), &mut rng)?;
    let expert = train_expert(0, &splits, &ExpertConfig::new(4))?;
    println!("{:>8} {:>8} {:>8} {:>5} {:>7} {:>7} {:>7}", "angle", "ae_loss", "emd_nn", "knn", "margin", "varrat", "entropy");
    for (lo, hi) in [(0.0, 20.0), (45.0, 60.0), (120.0, 180.0)] {
        for item in sample_dataset(&DomainSpec::digits(lo, hi), 4, &mut rng)?.items {
            let t = compute_trust_vector(&expert, &item.image)?;
            println!(
                "{:>8.1} {:>8.4} {:>8.3} {:>5} {:>7.3} {:>7.3} {:>7.3}",
                item.angle.unwrap_or(f64::NAN),
                t.ae_loss,
                t.emd_nn,
                t.knn_agree,
                t.softmax_margin,
                t.variation_ratio,
                t.entropy
            );
        }
    }
    Ok(())
}
