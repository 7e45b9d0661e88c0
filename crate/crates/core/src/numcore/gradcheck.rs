use super::layers::Layer;
use super::network::Network;
use super::tensor::Tensor;
use super::train::{batch_gradients, loss_and_grad, Loss, Sample, Target};
use crate::error::{arg, Result};

/// Denominator floor for the relative error, so parameters whose true
/// gradient is ~0 are judged on absolute error instead.
const REL_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradCheckReport {
    pub max_relative_error: f64,
    pub checked: usize,
    /// Parameters whose perturbation flips a relu input across zero.
    pub skipped: usize,
}

fn loss_kind(samples: &[Sample]) -> Loss {
    match samples.first().map(|s| &s.target) {
        Some(Target::Class(_)) => Loss::CrossEntropy,
        _ => Loss::Mse,
    }
}

/// Mean loss plus the sign pattern of every relu input.
fn probe(net: &Network, samples: &[Sample], loss: Loss) -> Result<(f64, Vec<bool>)> {
    let mut total = 0.0;
    let mut pattern = Vec::new();
    for s in samples {
        let trace = net.forward_trace(&s.input)?;
        for (i, layer) in net.layers().iter().enumerate() {
            if matches!(layer, Layer::Relu) {
                pattern.extend(trace[i].data().iter().map(|v| *v > 0.0));
            }
        }
        total += loss_and_grad(loss, trace.last().expect("output"), &s.target)?.0;
    }
    Ok((total / samples.len() as f64, pattern))
}

/// Compares backprop gradients with central finite differences over every
/// parameter. Relu inputs use the subgradient 0 at 0; any parameter whose
/// `±epsilon` perturbation changes a relu activation pattern sits on a kink
/// and is skipped.
pub fn gradient_check(net: &Network, batch: &[Sample], epsilon: f64) -> Result<GradCheckReport> {
    if !(1e-7..=1e-3).contains(&epsilon) {
        return arg(format!("epsilon must be in [1e-7, 1e-3], got {epsilon}"));
    }
    if batch.is_empty() {
        return arg("gradient check needs at least one sample");
    }
    let loss = loss_kind(batch);
    let refs: Vec<&Sample> = batch.iter().collect();
    let (_, grads) = batch_gradients(net, &refs, loss)?;
    let analytic: Vec<f64> = grads.into_iter().flatten().flatten().collect();

    let mut work = net.clone();
    let mut report = GradCheckReport {
        max_relative_error: 0.0,
        checked: 0,
        skipped: 0,
    };
    for (i, a) in analytic.iter().enumerate() {
        let original = *work.param_mut(i).expect("index in range");
        *work.param_mut(i).expect("index in range") = original + epsilon;
        let (plus, plus_pattern) = probe(&work, batch, loss)?;
        *work.param_mut(i).expect("index in range") = original - epsilon;
        let (minus, minus_pattern) = probe(&work, batch, loss)?;
        *work.param_mut(i).expect("index in range") = original;
        if plus_pattern != minus_pattern {
            report.skipped += 1;
            continue;
        }
        let numeric = (plus - minus) / (2.0 * epsilon);
        let rel = (a - numeric).abs() / (a.abs() + numeric.abs()).max(REL_FLOOR);
        report.max_relative_error = report.max_relative_error.max(rel);
        report.checked += 1;
    }
    Ok(report)
}

/// Convenience used by tests and examples: a small random batch for `net`.
pub fn random_batch<R: rand::Rng + ?Sized>(
    input_shape: &[usize],
    output: TargetSpec,
    n: usize,
    rng: &mut R,
) -> Vec<Sample> {
    let len: usize = input_shape.iter().product();
    (0..n)
        .map(|_| {
            let x: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
            let input = Tensor::new(input_shape.to_vec(), x).expect("shape from len");
            let target = match output {
                TargetSpec::Classes(c) => Target::Class(rng.random_range(0..c)),
                TargetSpec::Values(w) => Target::Values((0..w).map(|_| rng.random()).collect()),
            };
            Sample { input, target }
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub enum TargetSpec {
    Classes(usize),
    Values(usize),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::layers::{Conv2d, Dense};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dense_net_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let net = Network::mlp(&[5, 4, 3], &mut rng);
        let batch = random_batch(&[5], TargetSpec::Classes(3), 4, &mut rng);
        let r = gradient_check(&net, &batch, 1e-5).unwrap();
        assert!(r.max_relative_error < 1e-6, "{r:?}");
        assert!(r.checked > 0);
    }

    #[test]
    fn small_cnn_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let net = Network::new(vec![
            Layer::Conv2d(Conv2d::new(1, 2, 3, 1, &mut rng)),
            Layer::Relu,
            Layer::Conv2d(Conv2d::new(2, 3, 3, 2, &mut rng)),
            Layer::Relu,
            Layer::Flatten,
            Layer::Dense(Dense::new(3 * 2 * 2, 4, &mut rng)),
        ]);
        let batch = random_batch(&[1, 7, 7], TargetSpec::Classes(4), 4, &mut rng);
        let r = gradient_check(&net, &batch, 1e-5).unwrap();
        assert!(r.max_relative_error < 1e-4, "{r:?}");
    }

    #[test]
    fn all_zero_net_skips_kinks() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut net = Network::mlp(&[3, 3, 2], &mut rng);
        for layer in net.layers_mut() {
            for g in layer.params_mut() {
                g.iter_mut().for_each(|v| *v = 0.0);
            }
        }
        let batch = random_batch(&[3], TargetSpec::Classes(2), 4, &mut rng);
        let r = gradient_check(&net, &batch, 1e-5).unwrap();
        // first-layer weights and biases all sit on the relu kink
        assert!(r.skipped >= 9, "{r:?}");
        assert!(r.max_relative_error < 1e-6, "{r:?}");
    }

    #[test]
    fn epsilon_range_enforced() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let net = Network::mlp(&[2, 2], &mut rng);
        let batch = random_batch(&[2], TargetSpec::Values(2), 2, &mut rng);
        assert!(gradient_check(&net, &batch, 1e-2).is_err());
        assert!(gradient_check(&net, &batch, 1e-9).is_err());
    }
}
