use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::network::{Gradients, Network};
use super::tensor::Tensor;
use crate::error::{arg, Error, Result};

/// SGD-with-momentum hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub momentum: f64,
    pub batch_size: usize,
    pub epochs: usize,
    pub seed: u64,
}

impl TrainConfig {
    /// The expert classifier settings: lr 0.01, momentum 0.5, batch 10.
    pub fn expert(epochs: usize, seed: u64) -> Self {
        Self {
            learning_rate: 0.01,
            momentum: 0.5,
            batch_size: 10,
            epochs,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        // lr 0 is accepted so that a zero step can be expressed.
        if !(self.learning_rate >= 0.0 && self.learning_rate.is_finite()) {
            return arg(format!("learning_rate must be >= 0, got {}", self.learning_rate));
        }
        if !(0.0..1.0).contains(&self.momentum) {
            return arg(format!("momentum must be in [0, 1), got {}", self.momentum));
        }
        if self.batch_size == 0 {
            return arg("batch_size must be >= 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Loss {
    /// Softmax cross-entropy over logits against a class index.
    CrossEntropy,
    /// Mean squared error against a target vector.
    Mse,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Class(usize),
    Values(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub input: Tensor,
    pub target: Target,
}

impl Sample {
    pub fn class(input: Tensor, class: usize) -> Self {
        Self {
            input,
            target: Target::Class(class),
        }
    }

    pub fn values(input: Tensor, values: Vec<f64>) -> Self {
        Self {
            input,
            target: Target::Values(values),
        }
    }
}

/// Numerically stable softmax (max-subtracted).
pub fn softmax(logits: &[f64]) -> Result<Vec<f64>> {
    if logits.is_empty() {
        return arg("softmax of an empty vector");
    }
    if logits.iter().any(|v| !v.is_finite()) {
        return arg("softmax logits must be finite");
    }
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|v| (v - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    Ok(exps.into_iter().map(|e| e / sum).collect())
}

/// Index of the largest value, ties resolved toward the lower index.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

/// Loss of one `output` and its gradient with respect to that output.
pub fn loss_and_grad(loss: Loss, output: &Tensor, target: &Target) -> Result<(f64, Vec<f64>)> {
    let out = output.data();
    match (loss, target) {
        (Loss::CrossEntropy, Target::Class(c)) => {
            if *c >= out.len() {
                return arg(format!("class {c} outside {} logits", out.len()));
            }
            let max = out.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lse = max + out.iter().map(|v| (v - max).exp()).sum::<f64>().ln();
            let mut grad: Vec<f64> = out.iter().map(|v| (v - lse).exp()).collect();
            grad[*c] -= 1.0;
            Ok((lse - out[*c], grad))
        }
        (Loss::Mse, Target::Values(t)) => {
            if t.len() != out.len() {
                return arg(format!("target width {} vs output width {}", t.len(), out.len()));
            }
            let n = out.len() as f64;
            let mut sum = 0.0;
            let grad = out
                .iter()
                .zip(t)
                .map(|(y, t)| {
                    let d = y - t;
                    sum += d * d;
                    2.0 * d / n
                })
                .collect();
            Ok((sum / n, grad))
        }
        _ => arg("loss kind does not match target kind"),
    }
}

/// Mean loss over `samples` and the averaged parameter gradients.
pub fn batch_gradients(net: &Network, samples: &[&Sample], loss: Loss) -> Result<(f64, Gradients)> {
    let mut grads = net.zero_gradients();
    let mut total = 0.0;
    for s in samples {
        let trace = net.forward_trace(&s.input)?;
        let out = trace.last().expect("trace has output");
        let (l, g) = loss_and_grad(loss, out, &s.target)?;
        total += l;
        let g = Tensor::new(out.shape().to_vec(), g)?;
        net.backward(&trace, g, &mut grads);
    }
    let scale = 1.0 / samples.len() as f64;
    for group in grads.iter_mut().flatten() {
        group.iter_mut().for_each(|g| *g *= scale);
    }
    Ok((total * scale, grads))
}

pub fn mean_loss(net: &Network, samples: &[Sample], loss: Loss) -> Result<f64> {
    let mut total = 0.0;
    for s in samples {
        let out = net.forward(&s.input)?;
        total += loss_and_grad(loss, &out, &s.target)?.0;
    }
    Ok(total / samples.len().max(1) as f64)
}

/// Trains a copy of `net`, see [`train_logged`].
pub fn train(net: &Network, data: &[Sample], cfg: &TrainConfig, loss: Loss) -> Result<Network> {
    Ok(train_logged(net, data, cfg, loss)?.0)
}

/// Mini-batch SGD with momentum. The shuffle order is drawn from
/// `cfg.seed`, so equal inputs give bit-identical results. Returns the
/// trained network and the mean training loss of each epoch.
pub fn train_logged(
    net: &Network,
    data: &[Sample],
    cfg: &TrainConfig,
    loss: Loss,
) -> Result<(Network, Vec<f64>)> {
    cfg.validate()?;
    if data.is_empty() {
        return arg("training data is empty");
    }
    let mut net = net.clone();
    net.reset_momentum();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut order: Vec<usize> = (0..data.len()).collect();
    let mut history = Vec::with_capacity(cfg.epochs);
    for epoch in 0..cfg.epochs {
        order.shuffle(&mut rng);
        let mut epoch_loss = 0.0;
        for (batch, idx) in order.chunks(cfg.batch_size).enumerate() {
            let samples: Vec<&Sample> = idx.iter().map(|&i| &data[i]).collect();
            let (l, grads) = batch_gradients(&net, &samples, loss)?;
            if !l.is_finite() {
                return Err(Error::Divergence { epoch, batch });
            }
            epoch_loss += l * samples.len() as f64;
            net.apply_momentum_step(&grads, cfg.learning_rate, cfg.momentum);
        }
        history.push(epoch_loss / data.len() as f64);
    }
    if !net.flat_params().iter().all(|p| p.is_finite()) {
        return Err(Error::Divergence {
            epoch: cfg.epochs.saturating_sub(1),
            batch: 0,
        });
    }
    Ok((net, history))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn softmax_closed_forms() {
        assert_eq!(softmax(&[0.0, 0.0]).unwrap(), vec![0.5, 0.5]);
        let p = softmax(&[1000.0, 1000.0, 1000.0]).unwrap();
        for v in p {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }
        let p = softmax(&[2f64.ln(), 0.0]).unwrap();
        assert!((p[0] - 2.0 / 3.0).abs() < 1e-12);
        assert!((p[1] - 1.0 / 3.0).abs() < 1e-12);
        assert!(softmax(&[]).is_err());
    }

    #[test]
    fn perfect_prediction_has_zero_cross_entropy() {
        let out = Tensor::vector(vec![0.0, 800.0, 0.0]);
        let (l, _) = loss_and_grad(Loss::CrossEntropy, &out, &Target::Class(1)).unwrap();
        assert!(l.abs() < 1e-9);
    }

    #[test]
    fn zero_learning_rate_leaves_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let net = Network::mlp(&[3, 4, 2], &mut rng);
        let data: Vec<Sample> = (0..6)
            .map(|i| Sample::class(Tensor::vector(vec![rng.random(), rng.random(), 1.0]), i % 2))
            .collect();
        let cfg = TrainConfig {
            learning_rate: 0.0,
            momentum: 0.5,
            batch_size: 2,
            epochs: 1,
            seed: 9,
        };
        let trained = train(&net, &data, &cfg, Loss::CrossEntropy).unwrap();
        assert_eq!(trained.flat_params(), net.flat_params());
    }

    #[test]
    fn bad_configs_rejected() {
        let net = Network::mlp(&[1, 1], &mut ChaCha8Rng::seed_from_u64(0));
        let data = vec![Sample::values(Tensor::vector(vec![1.0]), vec![1.0])];
        let mut cfg = TrainConfig::expert(1, 0);
        cfg.batch_size = 0;
        assert!(train(&net, &data, &cfg, Loss::Mse).is_err());
        cfg.batch_size = 1;
        cfg.momentum = 1.0;
        assert!(train(&net, &data, &cfg, Loss::Mse).is_err());
        assert!(train(&net, &[], &TrainConfig::expert(1, 0), Loss::Mse).is_err());
    }

    #[test]
    fn divergence_reports_position() {
        let net = Network::mlp(&[1, 1], &mut ChaCha8Rng::seed_from_u64(0));
        let data = vec![Sample::values(Tensor::vector(vec![1e150]), vec![0.0])];
        let cfg = TrainConfig {
            learning_rate: 1e10,
            momentum: 0.0,
            batch_size: 1,
            epochs: 5,
            seed: 0,
        };
        match train(&net, &data, &cfg, Loss::Mse) {
            Err(Error::Divergence { epoch, batch }) => {
                assert!(epoch < 5);
                assert_eq!(batch, 0);
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }
}
