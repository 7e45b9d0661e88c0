//! Autoencoder world model and the domain-shift detector built on its
//! reconstruction loss.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datagen::{sample_dataset, DomainSpec, Image, LabeledDataset, LabeledImage};
use crate::error::{arg, Error, Result};
use crate::numcore::{train, Loss, Network, Sample, TrainConfig};

/// Percentile of in-domain losses used as the default in/out cut.
pub const DEFAULT_PERCENTILE: f64 = 99.0;

#[derive(Debug, Clone, PartialEq)]
pub struct AutoencoderModel {
    pub net: Network,
    /// Envelope of the data the model was trained on.
    pub trained_spec: DomainSpec,
    threshold: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainVerdict {
    pub loss: f64,
    pub in_domain: bool,
    pub threshold_used: f64,
}

fn reconstruction_samples(data: &LabeledDataset) -> Vec<Sample> {
    data.images()
        .map(|img| Sample::values(img.to_tensor(), img.pixels().to_vec()))
        .collect()
}

/// Seed for the initial weights, kept apart from the shuffle stream.
fn init_seed(seed: u64) -> u64 {
    seed ^ 0x5eed_a0e0_0000_0001
}

impl AutoencoderModel {
    /// Untrained model wrapping `net`.
    pub fn new(net: Network, trained_spec: DomainSpec) -> Result<Self> {
        let out = net.output_shape(&[1, 28, 28])?;
        if out != [784] {
            return arg(format!("autoencoder must map 784 -> 784, got output {out:?}"));
        }
        Ok(Self {
            net,
            trained_spec,
            threshold: None,
        })
    }

    pub fn threshold(&self) -> Option<f64> {
        self.threshold
    }

    pub fn set_threshold(&mut self, threshold: f64) -> Result<()> {
        if !(threshold > 0.0 && threshold.is_finite()) {
            return arg(format!("threshold must be > 0, got {threshold}"));
        }
        self.threshold = Some(threshold);
        Ok(())
    }

    pub fn reconstruct(&self, image: &Image) -> Result<Image> {
        let out = self.net.forward(&image.to_tensor())?;
        Image::from_pixels(out.into_data().into_iter().map(|v| v.clamp(0.0, 1.0)).collect())
    }
}

/// Trains a fresh 784-128-32-128-784 autoencoder on `data` with MSE.
pub fn train_autoencoder(data: &LabeledDataset, cfg: &TrainConfig) -> Result<AutoencoderModel> {
    let spec = DomainSpec::envelope_of(data).ok_or_else(|| Error::Argument("empty dataset".into()))?;
    let net = Network::autoencoder(&mut ChaCha8Rng::seed_from_u64(init_seed(cfg.seed)));
    let trained = train(&net, &reconstruction_samples(data), cfg, Loss::Mse)?;
    AutoencoderModel::new(trained, spec)
}

/// Continues training `model` on `data`; the threshold is cleared because
/// it no longer matches the weights.
pub fn refresh_autoencoder(model: &AutoencoderModel, data: &LabeledDataset, cfg: &TrainConfig) -> Result<AutoencoderModel> {
    let spec = DomainSpec::envelope_of(data).ok_or_else(|| Error::Argument("empty dataset".into()))?;
    let net = train(&model.net, &reconstruction_samples(data), cfg, Loss::Mse)?;
    AutoencoderModel::new(net, spec)
}

/// Per-pixel mean squared error between `image` and its reconstruction.
pub fn reconstruction_loss(model: &AutoencoderModel, image: &Image) -> Result<f64> {
    let out = model.net.forward(&image.to_tensor())?;
    let n = out.len() as f64;
    Ok(out
        .data()
        .iter()
        .zip(image.pixels())
        .map(|(y, x)| (y - x) * (y - x))
        .sum::<f64>()
        / n)
}

/// Nearest-rank percentile of `values` (`0 < p <= 100`).
pub fn percentile(values: &[f64], p: f64) -> Result<f64> {
    if values.is_empty() {
        return arg("percentile of an empty set");
    }
    if !(p > 0.0 && p <= 100.0) {
        return arg(format!("percentile must be in (0, 100], got {p}"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rank = ((p / 100.0) * sorted.len() as f64).ceil() as usize;
    Ok(sorted[rank.clamp(1, sorted.len()) - 1])
}

/// Sets the model threshold to the `percentile` of losses on `calibration`.
pub fn calibrate_threshold(model: &mut AutoencoderModel, calibration: &LabeledDataset, percentile_p: f64) -> Result<f64> {
    if calibration.is_empty() {
        return arg("calibration set is empty");
    }
    let losses = calibration
        .images()
        .map(|img| reconstruction_loss(model, img))
        .collect::<Result<Vec<_>>>()?;
    // a perfect reconstruction would give 0, which is not a usable cut
    let t = percentile(&losses, percentile_p)?.max(f64::MIN_POSITIVE);
    model.set_threshold(t)?;
    Ok(t)
}

/// In-domain iff the reconstruction loss does not exceed the threshold.
pub fn domain_verdict(model: &AutoencoderModel, image: &Image) -> Result<DomainVerdict> {
    let threshold = model
        .threshold
        .ok_or_else(|| Error::State("autoencoder threshold not calibrated".into()))?;
    let loss = reconstruction_loss(model, image)?;
    Ok(DomainVerdict {
        loss,
        in_domain: loss <= threshold,
        threshold_used: threshold,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveBin {
    pub bin_start: f64,
    pub bin_end: f64,
    pub mean_loss: f64,
    pub std_loss: f64,
    pub n: usize,
}

/// Mean and (population) standard deviation of reconstruction loss over
/// angle bins `[start, start + width)` covering `[lo, hi]`, drawing
/// `per_bin` images from each bin with `template`'s classes and noise.
pub fn loss_curve<R: Rng + ?Sized>(
    model: &AutoencoderModel,
    template: &DomainSpec,
    (lo, hi): (f64, f64),
    width: f64,
    per_bin: usize,
    rng: &mut R,
) -> Result<Vec<CurveBin>> {
    if !(width > 0.0) || hi <= lo {
        return arg("loss curve needs a positive bin width and lo < hi");
    }
    let bins = ((hi - lo) / width).ceil() as usize;
    (0..bins)
        .map(|b| {
            let start = lo + b as f64 * width;
            let end = (start + width).min(hi);
            let spec = DomainSpec {
                angle_min: start,
                angle_max: end,
                ..template.clone()
            };
            let data = sample_dataset(&spec, per_bin, rng)?;
            let losses = data
                .images()
                .map(|img| reconstruction_loss(model, img))
                .collect::<Result<Vec<_>>>()?;
            let n = losses.len();
            let mean = losses.iter().sum::<f64>() / n as f64;
            let var = losses.iter().map(|l| (l - mean) * (l - mean)).sum::<f64>() / n as f64;
            Ok(CurveBin {
                bin_start: start,
                bin_end: end,
                mean_loss: mean,
                std_loss: var.sqrt(),
                n,
            })
        })
        .collect()
}

/// Source of synthesized reference data: the learned autoencoder, or the
/// real generator when the world model is bypassed.
#[derive(Debug, Clone)]
pub enum WorldModel {
    Learned(AutoencoderModel),
    RealWorld,
}

impl WorldModel {
    /// Labeled images resembling draws from `spec`. The learned variant
    /// passes real draws through the autoencoder and keeps their labels.
    pub fn synthesize<R: Rng + ?Sized>(&self, spec: &DomainSpec, n: usize, rng: &mut R) -> Result<LabeledDataset> {
        let real = sample_dataset(spec, n, rng)?;
        match self {
            WorldModel::RealWorld => Ok(real),
            WorldModel::Learned(model) => {
                let items = real
                    .items
                    .into_iter()
                    .map(|item| {
                        Ok(LabeledImage {
                            image: model.reconstruct(&item.image)?,
                            ..item
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(LabeledDataset::new(items))
            }
        }
    }
}

/// Spearman rank correlation (average ranks for ties).
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|a, b| v[*a].total_cmp(&v[*b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for k in i..=j {
                r[idx[k]] = avg;
            }
            i = j + 1;
        }
        r
    }
    pearson(&ranks(x), &ranks(y))
}

pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len().min(y.len()) as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    sxy / (sxx * syy).sqrt()
}

/// Standard deviation over mean of the curve's bin means.
pub fn coefficient_of_variation(curve: &[CurveBin]) -> f64 {
    let n = curve.len() as f64;
    let mean = curve.iter().map(|b| b.mean_loss).sum::<f64>() / n;
    let var = curve.iter().map(|b| (b.mean_loss - mean).powi(2)).sum::<f64>() / n;
    var.sqrt() / mean
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{Dense, Layer};

    fn quick_cfg(epochs: usize) -> TrainConfig {
        TrainConfig {
            learning_rate: 0.05,
            momentum: 0.9,
            batch_size: 10,
            epochs,
            seed: 3,
        }
    }

    fn zero_output_model() -> AutoencoderModel {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut dense = Dense::new(784, 784, &mut rng);
        dense.weights.iter_mut().for_each(|w| *w = 0.0);
        let net = Network::new(vec![Layer::Flatten, Layer::Dense(dense)]);
        AutoencoderModel::new(net, DomainSpec::digits(0.0, 10.0)).unwrap()
    }

    #[test]
    fn zero_image_through_zero_model_has_no_loss() {
        let model = zero_output_model();
        assert_eq!(reconstruction_loss(&model, &Image::zeros()).unwrap(), 0.0);
    }

    #[test]
    fn percentile_rules() {
        let v: Vec<f64> = (1..=200).map(|i| i as f64).collect();
        assert_eq!(percentile(&v, 100.0).unwrap(), 200.0);
        assert_eq!(percentile(&v, 50.0).unwrap(), 100.0);
        assert_eq!(percentile(&v, 99.0).unwrap(), 198.0);
        assert!(percentile(&[], 50.0).is_err());
        assert!(percentile(&v, 0.0).is_err());
    }

    #[test]
    fn verdict_requires_threshold_and_uses_le() {
        let mut model = zero_output_model();
        assert!(matches!(domain_verdict(&model, &Image::zeros()), Err(Error::State(_))));
        let img = crate::datagen::base_glyph(1).unwrap();
        let loss = reconstruction_loss(&model, &img).unwrap();
        model.set_threshold(loss).unwrap();
        let v = domain_verdict(&model, &img).unwrap();
        assert!(v.in_domain);
        assert_eq!(v.threshold_used, loss);
        model.set_threshold(loss * 0.999).unwrap();
        assert!(!domain_verdict(&model, &img).unwrap().in_domain);
    }

    #[test]
    fn calibration_percentiles() {
        let spec = DomainSpec::digits(0.0, 10.0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let data = sample_dataset(&spec, 60, &mut rng).unwrap();
        let mut model = train_autoencoder(&data, &quick_cfg(3)).unwrap();
        let cal = sample_dataset(&spec, 200, &mut rng).unwrap();

        calibrate_threshold(&mut model, &cal, 100.0).unwrap();
        assert!(cal.images().all(|i| domain_verdict(&model, i).unwrap().in_domain));

        calibrate_threshold(&mut model, &cal, 50.0).unwrap();
        let out = cal.images().filter(|i| !domain_verdict(&model, i).unwrap().in_domain).count();
        assert_eq!(out, 100);

        calibrate_threshold(&mut model, &cal, 99.0).unwrap();
        let out = cal.images().filter(|i| !domain_verdict(&model, i).unwrap().in_domain).count();
        assert_eq!(out, 2);

        assert!(calibrate_threshold(&mut model, &LabeledDataset::default(), 99.0).is_err());
    }

    #[test]
    fn zero_epochs_returns_initialisation() {
        let spec = DomainSpec::digits(0.0, 10.0);
        let data = sample_dataset(&spec, 10, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let cfg = quick_cfg(0);
        let model = train_autoencoder(&data, &cfg).unwrap();
        let init = Network::autoencoder(&mut ChaCha8Rng::seed_from_u64(init_seed(cfg.seed)));
        assert_eq!(model.net, init);
    }

    #[test]
    fn rank_correlations() {
        assert!((spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 35.0]) - 1.0).abs() < 1e-12);
        assert!((spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]) + 1.0).abs() < 1e-12);
        assert!((pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]) - 1.0).abs() < 1e-12);
    }
}
