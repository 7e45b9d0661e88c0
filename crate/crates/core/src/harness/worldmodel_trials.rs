//! Autoencoders trained on one rotation range, probed over 0-100°.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datagen::{sample_dataset, DomainSpec};
use crate::error::Result;
use crate::experts::autoencoder_config;
use crate::worldmodel::{loss_curve, train_autoencoder, CurveBin};

pub const TRAINING_RANGES: [(f64, f64); 4] = [(0.0, 10.0), (0.0, 100.0), (0.0, 50.0), (40.0, 50.0)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldModelSettings {
    pub train_size: usize,
    pub epochs: usize,
    pub per_bin: usize,
    pub bin_width: f64,
    pub probe_range: (f64, f64),
}

impl Default for WorldModelSettings {
    fn default() -> Self {
        Self {
            train_size: 400,
            epochs: 20,
            per_bin: 100,
            bin_width: 10.0,
            probe_range: (0.0, 100.0),
        }
    }
}

/// Curve of one autoencoder trained on `range`.
pub fn single_curve(range: (f64, f64), settings: &WorldModelSettings, seed: u64) -> Result<Vec<CurveBin>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = DomainSpec::digits(range.0, range.1);
    let data = sample_dataset(&spec, settings.train_size, &mut rng)?;
    let cfg = crate::numcore::TrainConfig {
        epochs: settings.epochs,
        ..autoencoder_config(rng.random())
    };
    let model = train_autoencoder(&data, &cfg)?;
    loss_curve(&model, &spec, settings.probe_range, settings.bin_width, settings.per_bin, &mut rng)
}

/// Bin-wise mean over `trials` independently seeded models. `mean_loss` is
/// the mean of trial means, `std_loss` the spread of those means across
/// trials, and `n` the images pooled per bin.
pub fn averaged_curve(range: (f64, f64), trials: usize, settings: &WorldModelSettings, seed: u64) -> Result<Vec<CurveBin>> {
    let curves = (0..trials)
        .map(|k| single_curve(range, settings, super::trial_seed(seed, "worldmodel", k)))
        .collect::<Result<Vec<_>>>()?;
    let bins = curves[0].len();
    Ok((0..bins)
        .map(|b| {
            let means: Vec<f64> = curves.iter().map(|c| c[b].mean_loss).collect();
            let mean = means.iter().sum::<f64>() / trials as f64;
            let var = means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>() / trials as f64;
            CurveBin {
                bin_start: curves[0][b].bin_start,
                bin_end: curves[0][b].bin_end,
                mean_loss: mean,
                std_loss: var.sqrt(),
                n: curves.iter().map(|c| c[b].n).sum(),
            }
        })
        .collect())
}

pub const CSV_HEADER: &str = "bin_start,bin_end,mean_loss,std_loss,n";

pub fn curve_csv(curve: &[CurveBin]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for b in curve {
        s.push_str(&format!(
            "{},{},{:.8},{:.8},{}\n",
            b.bin_start, b.bin_end, b.mean_loss, b.std_loss, b.n
        ));
    }
    s
}

pub fn range_tag(range: (f64, f64)) -> String {
    format!("{}-{}", range.0, range.1)
}
