//! Three experts and a trained manager answering on in-domain and rotated
//! digits, including abstentions.

use acl::datagen::{sample_dataset, DomainSpec};
use acl::experts::ensemble_predict;
use acl::harness::drift::{build_trial, DriftKind, DriftSettings};
use acl::manager::{manager_decide, Answer};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> acl::Result<()> {
    let mut settings = DriftSettings::new(DriftKind::Slow);
    settings.timesteps = 1;
    let system = build_trial(&settings, 8)?.system;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (lo, hi) in [(0.0, 20.0), (40.0, 60.0), (150.0, 180.0)] {
        let data = sample_dataset(&DomainSpec::digits(lo, hi), 100, &mut rng)?;
        let (mut correct, mut abstained) = (0, 0);
        for item in &data.items {
            let d = manager_decide(&system.manager, &ensemble_predict(&system.ensemble, &item.image)?)?;
            match d.answer {
                Answer::Class(c) => correct += (c == item.label) as usize,
                Answer::Abstain => abstained += 1,
            }
        }
        println!("{lo:>5}-{hi:<5} correct {correct:3}/100  abstained {abstained:3}");
    }
    Ok(())
}
