//! Finite-difference check of backpropagation on a small CNN and an MLP.

use acl::numcore::{gradient_check, random_batch, Conv2d, Dense, Layer, Network, TargetSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> acl::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cnn = Network::new(vec![
        Layer::Conv2d(Conv2d::new(1, 2, 3, 1, &mut rng)),
        Layer::Relu,
        Layer::Conv2d(Conv2d::new(2, 3, 3, 2, &mut rng)),
        Layer::Relu,
        Layer::Flatten,
        Layer::Dense(Dense::new(12, 4, &mut rng)),
    ]);
    let batch = random_batch(&[1, 7, 7], TargetSpec::Classes(4), 4, &mut rng);
    for eps in [1e-3, 1e-5, 1e-7] {
        let r = gradient_check(&cnn, &batch, eps)?;
        println!(
            "cnn  eps {eps:.0e}: max relative error {:.2e} ({} checked, {} skipped at relu kinks)",
            r.max_relative_error, r.checked, r.skipped
        );
    }

    let ae = Network::new(vec![
        Layer::Dense(Dense::new(10, 3, &mut rng)),
        Layer::Relu,
        Layer::Dense(Dense::new(3, 10, &mut rng)),
        Layer::Sigmoid,
    ]);
    let batch = random_batch(&[10], TargetSpec::Values(10), 4, &mut rng);
    let r = gradient_check(&ae, &batch, 1e-5)?;
    println!("mlp  eps 1e-5: max relative error {:.2e}", r.max_relative_error);
    Ok(())
}
