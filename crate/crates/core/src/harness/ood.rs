//! One expert trained on 0-10°, scored on a near and a far rotation band.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datagen::{sample_dataset, standard_splits, DomainSpec, LabeledDataset, NUM_CLASSES, TEST_SIZE};
use crate::error::Result;
use crate::experts::{train_expert, ExpertConfig, ExpertState};

pub const TRAIN_RANGE: (f64, f64) = (0.0, 10.0);
pub const NEAR_RANGE: (f64, f64) = (10.0, 20.0);
pub const FAR_RANGE: (f64, f64) = (90.0, 120.0);

/// `matrix[true][predicted]` counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confusion {
    pub matrix: Vec<Vec<usize>>,
}

impl Confusion {
    pub fn of(expert: &ExpertState, data: &LabeledDataset) -> Result<Self> {
        let mut matrix = vec![vec![0; NUM_CLASSES]; NUM_CLASSES];
        for item in &data.items {
            let (pred, _) = expert.predict(&item.image)?;
            matrix[item.label][pred] += 1;
        }
        Ok(Self { matrix })
    }

    pub fn total(&self) -> usize {
        self.matrix.iter().flatten().sum()
    }

    pub fn accuracy(&self) -> f64 {
        let trace: usize = (0..self.matrix.len()).map(|i| self.matrix[i][i]).sum();
        trace as f64 / self.total() as f64
    }

    pub fn to_csv(&self) -> String {
        let header: Vec<String> = (0..self.matrix.len()).map(|c| format!("pred_{c}")).collect();
        let mut s = header.join(",");
        s.push('\n');
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct OodResult {
    pub near: Confusion,
    pub far: Confusion,
}

pub fn run_ood_trial(seed: u64) -> Result<OodResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let splits = standard_splits(&DomainSpec::digits(TRAIN_RANGE.0, TRAIN_RANGE.1), &mut rng)?;
    let expert = train_expert(0, &splits, &ExpertConfig::new(rng.random()))?;
    let near = sample_dataset(&DomainSpec::digits(NEAR_RANGE.0, NEAR_RANGE.1), TEST_SIZE, &mut rng)?;
    let far = sample_dataset(&DomainSpec::digits(FAR_RANGE.0, FAR_RANGE.1), TEST_SIZE, &mut rng)?;
    Ok(OodResult {
        near: Confusion::of(&expert, &near)?,
        far: Confusion::of(&expert, &far)?,
    })
}
