//! Fuses expert answers through a learned trust scorer.
//!
//! The scorer is a small dense network over the flattened trust vector
//! (standardised per feature) with a two-way softmax head; the score of an
//! expert is the probability of the "trustworthy" class.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::datagen::LabeledDataset;
use crate::error::{arg, Error, Result};
use crate::experts::{ensemble_predict, ExpertOutput, ExpertState};
use crate::numcore::{softmax, train, Loss, Network, Sample, Tensor, TrainConfig};
use crate::trust::TrustVector;

pub const DEFAULT_TRUST_TOLERANCE: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub struct ScoredRow {
    pub features: Vec<f64>,
    /// 1 when the expert's answer should be trusted.
    pub target: u8,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScoredSet {
    pub rows: Vec<ScoredRow>,
}

/// One row per (image, expert): initial-data images are labeled by whether
/// the expert answered correctly, every `ood_slice` image is labeled 0.
pub fn build_manager_training_set(
    ensemble: &[ExpertState],
    initial: &LabeledDataset,
    ood_slice: &LabeledDataset,
) -> Result<ScoredSet> {
    for item in &ood_slice.items {
        let angle = item
            .angle
            .ok_or_else(|| Error::Argument("untrusted slice items need a known angle".into()))?;
        if let Some(e) = ensemble.iter().find(|e| e.domain_ae.trained_spec.contains_angle(angle)) {
            return arg(format!(
                "untrusted slice angle {angle} lies inside expert {}'s training range",
                e.id
            ));
        }
    }
    let mut rows = Vec::with_capacity((initial.len() + ood_slice.len()) * ensemble.len());
    for (data, trusted) in [(initial, true), (ood_slice, false)] {
        for item in &data.items {
            for out in ensemble_predict(ensemble, &item.image)? {
                rows.push(ScoredRow {
                    features: out.trust.features(),
                    target: (trusted && out.label == item.label) as u8,
                });
            }
        }
    }
    Ok(ScoredSet { rows })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ManagerModel {
    pub scorer: Network,
    feature_mean: Vec<f64>,
    feature_scale: Vec<f64>,
    pub trust_tolerance: f64,
}

impl ManagerModel {
    fn standardise(&self, features: &[f64]) -> Result<Tensor> {
        if features.len() != self.feature_mean.len() {
            return arg(format!(
                "trust vector width {} vs manager width {}",
                features.len(),
                self.feature_mean.len()
            ));
        }
        Ok(Tensor::vector(
            features
                .iter()
                .zip(&self.feature_mean)
                .zip(&self.feature_scale)
                .map(|((f, m), s)| (f - m) / s)
                .collect(),
        ))
    }

    fn score_features(&self, features: &[f64]) -> Result<f64> {
        let logits = self.scorer.forward(&self.standardise(features)?)?;
        Ok(softmax(logits.data())?[1])
    }

    /// Trust score in `[0, 1]` for one expert's trust vector.
    pub fn score(&self, trust: &TrustVector) -> Result<f64> {
        self.score_features(&trust.features())
    }
}

pub fn manager_train_config(seed: u64) -> TrainConfig {
    TrainConfig {
        learning_rate: 0.05,
        momentum: 0.9,
        batch_size: 16,
        epochs: 60,
        seed,
    }
}

/// Fits the scorer with cross-entropy on the 0/1 targets.
pub fn train_manager(set: &ScoredSet, cfg: &TrainConfig, trust_tolerance: f64) -> Result<ManagerModel> {
    if !(trust_tolerance > 0.0 && trust_tolerance < 1.0) {
        return arg(format!("trust tolerance must lie in (0, 1), got {trust_tolerance}"));
    }
    let positives = set.rows.iter().filter(|r| r.target == 1).count();
    if positives == 0 || positives == set.rows.len() {
        return arg("manager training set needs both trusted and untrusted rows");
    }
    let width = set.rows[0].features.len();
    if set.rows.iter().any(|r| r.features.len() != width) {
        return arg("inconsistent feature widths");
    }
    let n = set.rows.len() as f64;
    let mut mean = vec![0.0; width];
    for r in &set.rows {
        for (m, f) in mean.iter_mut().zip(&r.features) {
            *m += f / n;
        }
    }
    let mut scale = vec![0.0; width];
    for r in &set.rows {
        for ((s, f), m) in scale.iter_mut().zip(&r.features).zip(&mean) {
            *s += (f - m) * (f - m) / n;
        }
    }
    // constant features are passed through centred
    let scale: Vec<f64> = scale.into_iter().map(|v| if v > 1e-12 { v.sqrt() } else { 1.0 }).collect();
    let init = Network::mlp(&[width, 16, 2], &mut ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4d61_6e61));
    let mut model = ManagerModel {
        scorer: init,
        feature_mean: mean,
        feature_scale: scale,
        trust_tolerance,
    };
    let samples = set
        .rows
        .iter()
        .map(|r| Ok(Sample::class(model.standardise(&r.features)?, r.target as usize)))
        .collect::<Result<Vec<_>>>()?;
    model.scorer = train(&model.scorer, &samples, cfg, Loss::CrossEntropy)?;
    Ok(model)
}

/// Scores for every row of a scored set.
pub fn score_rows(m: &ManagerModel, set: &ScoredSet) -> Result<Vec<f64>> {
    set.rows.iter().map(|r| m.score_features(&r.features)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Class(usize),
    Abstain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub answer: Answer,
    /// Highest per-expert score, reported even when abstaining.
    pub confidence: f64,
    /// Highest-scoring expert; `None` when abstaining.
    pub chosen_expert: Option<usize>,
    pub per_expert_scores: Vec<f64>,
    /// Raised when no expert meets the trust tolerance.
    pub retrain_signal: bool,
}

impl Decision {
    /// `t,image,label,chosen,confidence,scores` with `;`-separated scores.
    pub fn log_line(&self, timestep: usize, image_index: usize) -> String {
        let label = match self.answer {
            Answer::Class(c) => c.to_string(),
            Answer::Abstain => "abstain".into(),
        };
        let chosen = self.chosen_expert.map(|c| c.to_string()).unwrap_or_else(|| "none".into());
        let scores: Vec<String> = self.per_expert_scores.iter().map(|s| format!("{s:.6}")).collect();
        format!(
            "{timestep},{image_index},{label},{chosen},{:.6},{}",
            self.confidence,
            scores.join(";")
        )
    }
}

/// Picks the highest-scoring expert (ties go to the earlier one) and
/// abstains when even that score is below the trust tolerance.
pub fn manager_decide(m: &ManagerModel, per_expert: &[ExpertOutput]) -> Result<Decision> {
    if per_expert.is_empty() {
        return arg("no expert outputs to decide between");
    }
    let scores = per_expert
        .iter()
        .map(|o| m.score(&o.trust))
        .collect::<Result<Vec<_>>>()?;
    let mut best = 0;
    for (i, s) in scores.iter().enumerate() {
        if *s > scores[best] {
            best = i;
        }
    }
    let confidence = scores[best];
    let trusted = confidence >= m.trust_tolerance;
    Ok(Decision {
        answer: if trusted {
            Answer::Class(per_expert[best].label)
        } else {
            Answer::Abstain
        },
        confidence,
        chosen_expert: trusted.then_some(per_expert[best].expert_id),
        per_expert_scores: scores,
        retrain_signal: !trusted,
    })
}

/// Mean over the interval of each decision's highest expert score.
pub fn interval_confidence(decisions: &[Decision]) -> Result<f64> {
    if decisions.is_empty() {
        return arg("interval has no decisions");
    }
    Ok(decisions.iter().map(|d| d.confidence).sum::<f64>() / decisions.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::Layer;

    /// Manager whose score is sigmoid(w * feature0 + b), via a 2-logit head
    /// with logits (0, w * x + b).
    fn linear_manager(width: usize, tol: f64) -> ManagerModel {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut net = Network::mlp(&[width, 2], &mut rng);
        if let Layer::Dense(d) = &mut net.layers_mut()[0] {
            d.weights.iter_mut().for_each(|w| *w = 0.0);
            d.weights[width] = 1.0;
            d.biases = vec![0.0, 0.0];
        }
        ManagerModel {
            scorer: net,
            feature_mean: vec![0.0; width],
            feature_scale: vec![1.0; width],
            trust_tolerance: tol,
        }
    }

    fn output_with_logit(id: usize, label: usize, logit: f64) -> ExpertOutput {
        ExpertOutput {
            expert_id: id,
            label,
            probs: vec![0.5, 0.5],
            trust: TrustVector {
                ae_loss: logit,
                emd_nn: 0.0,
                knn_agree: 1,
                softmax_margin: 0.0,
                variation_ratio: 0.5,
                entropy: 2f64.ln(),
                class_softmax: vec![0.5, 0.5],
            },
        }
    }

    fn logit_for(p: f64) -> f64 {
        (p / (1.0 - p)).ln()
    }

    #[test]
    fn single_expert_passes_through() {
        let m = linear_manager(8, 0.5);
        let d = manager_decide(&m, &[output_with_logit(0, 3, logit_for(0.9))]).unwrap();
        assert_eq!(d.answer, Answer::Class(3));
        assert!((d.confidence - 0.9).abs() < 1e-12);
        assert!(!d.retrain_signal);
    }

    #[test]
    fn abstains_below_tolerance() {
        let m = linear_manager(8, 0.5);
        let outs = [
            output_with_logit(0, 1, logit_for(0.3)),
            output_with_logit(1, 2, logit_for(0.4)),
        ];
        let d = manager_decide(&m, &outs).unwrap();
        assert_eq!(d.answer, Answer::Abstain);
        assert!(d.retrain_signal);
        assert_eq!(d.chosen_expert, None);
        assert!((d.confidence - 0.4).abs() < 1e-12);
    }

    #[test]
    fn equal_scores_choose_lower_id() {
        let m = linear_manager(8, 0.5);
        let outs = [
            output_with_logit(0, 5, logit_for(0.8)),
            output_with_logit(1, 6, logit_for(0.8)),
        ];
        let d = manager_decide(&m, &outs).unwrap();
        assert_eq!(d.answer, Answer::Class(5));
        assert_eq!(d.chosen_expert, Some(0));
    }

    #[test]
    fn weaker_expert_never_changes_label() {
        let m = linear_manager(8, 0.5);
        let mut outs = vec![output_with_logit(0, 4, 1.5)];
        let before = manager_decide(&m, &outs).unwrap().answer;
        outs.push(output_with_logit(1, 9, 0.2));
        assert_eq!(manager_decide(&m, &outs).unwrap().answer, before);
    }

    #[test]
    fn interval_means() {
        let mk = |c: f64| Decision {
            answer: Answer::Abstain,
            confidence: c,
            chosen_expert: None,
            per_expert_scores: vec![c],
            retrain_signal: true,
        };
        assert_eq!(interval_confidence(&[mk(1.0), mk(1.0)]).unwrap(), 1.0);
        let v = interval_confidence(&[mk(0.2), mk(0.4), mk(0.6)]).unwrap();
        assert!((v - 0.4).abs() < 1e-12);
        assert!(interval_confidence(&[]).is_err());
    }

    #[test]
    fn training_rejects_single_class_sets() {
        let set = ScoredSet {
            rows: vec![ScoredRow { features: vec![1.0, 2.0], target: 1 }; 4],
        };
        assert!(train_manager(&set, &manager_train_config(0), 0.5).is_err());
        assert!(train_manager(&set, &manager_train_config(0), 1.0).is_err());
    }

    #[test]
    fn zero_epoch_manager_is_its_initialisation() {
        let rows = (0..20)
            .map(|i| ScoredRow {
                features: vec![i as f64, (i % 3) as f64],
                target: (i >= 10) as u8,
            })
            .collect();
        let set = ScoredSet { rows };
        let mut cfg = manager_train_config(5);
        cfg.epochs = 0;
        let m = train_manager(&set, &cfg, 0.5).unwrap();
        let init = Network::mlp(&[2, 16, 2], &mut ChaCha8Rng::seed_from_u64(5 ^ 0x4d61_6e61));
        assert_eq!(m.scorer, init);
    }
}
