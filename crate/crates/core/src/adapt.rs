//! Retrainer and Replacer.
//!
//! Each cycle partitions the manager's decisions on a live batch into
//! uncertain and confident buffers. The Retrainer clusters the uncertain
//! images and labels each cluster by its nearest class centroid; the Replacer
//! overwrites the oldest training items with confidently pseudo-labeled ones.
//! Mutated experts retrain their active weights and may then be promoted.
//!
//! Nothing here sees live-stream ground truth: [`LiveBatch`] has no labels.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::datagen::{Image, LabeledDataset, LabeledImage, LiveBatch};
use crate::error::{arg, Result};
use crate::experts::{
    autoencoder_config, class_samples, evaluate_network, evaluate_promotion, EvalReport, ExpertState,
    PromotionDecision, PromotionFlags, Standards,
};
use crate::manager::{Answer, Decision, ManagerModel};
use crate::numcore::{train, Loss, TrainConfig};
use crate::worldmodel::{calibrate_threshold, refresh_autoencoder, DEFAULT_PERCENTILE};

#[derive(Debug, Clone, PartialEq)]
pub struct AdaptConfig {
    pub retrainer: bool,
    /// Replacer speed; 0 turns the Replacer off.
    pub overwrite_rate: f64,
    /// Fraction of an expert's data replaced by clustered uncertain samples.
    pub cluster_merge_rate: f64,
    pub new_class_threshold: f64,
    pub k_max: usize,
    /// Best silhouette a k >= 2 clustering must beat to be preferred over a
    /// single cluster.
    pub min_silhouette: f64,
    pub retrain_epochs: usize,
    pub autoencoder_epochs: usize,
    pub confident_score_floor: f64,
    pub standards: Standards,
    pub performance_maximizing: bool,
    pub seed: u64,
}

pub const FAST_REPLACER: f64 = 0.20;
pub const SLOW_REPLACER: f64 = 0.02;

impl Default for AdaptConfig {
    fn default() -> Self {
        Self {
            retrainer: true,
            overwrite_rate: FAST_REPLACER,
            cluster_merge_rate: 0.05,
            new_class_threshold: 12.0,
            k_max: 4,
            min_silhouette: 0.25,
            retrain_epochs: 1,
            autoencoder_epochs: 1,
            confident_score_floor: 0.5,
            standards: Standards::default(),
            performance_maximizing: true,
            seed: 0,
        }
    }
}

impl AdaptConfig {
    pub fn validate(&self) -> Result<()> {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        if !unit(self.overwrite_rate) || !unit(self.cluster_merge_rate) || !unit(self.confident_score_floor) {
            return arg("rates and the confidence floor must lie in [0, 1]");
        }
        if !(self.new_class_threshold > 0.0) {
            return arg("new_class_threshold must be positive");
        }
        if self.k_max == 0 {
            return arg("k_max must be >= 1");
        }
        Ok(())
    }

    /// True when the cycle can touch no expert.
    pub fn is_inert(&self) -> bool {
        !self.retrainer && self.overwrite_rate == 0.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UncertainItem {
    pub image: Image,
    pub per_expert_scores: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfidentItem {
    pub image: Image,
    pub label: usize,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FlaggedBuffers {
    pub uncertain: Vec<UncertainItem>,
    pub confident: Vec<ConfidentItem>,
}

pub fn collect_flags(batch: &LiveBatch, decisions: &[Decision], cfg: &AdaptConfig) -> Result<FlaggedBuffers> {
    if batch.images.len() != decisions.len() {
        return arg(format!(
            "{} images but {} decisions",
            batch.images.len(),
            decisions.len()
        ));
    }
    let mut buf = FlaggedBuffers::default();
    for (image, d) in batch.images.iter().zip(decisions) {
        match d.answer {
            Answer::Class(label) if d.confidence >= cfg.confident_score_floor => buf.confident.push(ConfidentItem {
                image: image.clone(),
                label,
                score: d.confidence,
            }),
            _ => buf.uncertain.push(UncertainItem {
                image: image.clone(),
                per_expert_scores: d.per_expert_scores.clone(),
            }),
        }
    }
    Ok(buf)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterLabel {
    Existing(usize),
    NewClass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub members: Vec<usize>,
    pub centroid: Vec<f64>,
    pub label: ClusterLabel,
    /// Distance from the centroid to the nearest class centroid.
    pub distance: f64,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn mean_of(points: &[&[f64]]) -> Vec<f64> {
    let mut m = vec![0.0; points[0].len()];
    for p in points {
        for (a, b) in m.iter_mut().zip(p.iter()) {
            *a += b;
        }
    }
    let n = points.len() as f64;
    m.iter_mut().for_each(|v| *v /= n);
    m
}

/// Lloyd's algorithm from a k-means++ start. Returns the assignment and its
/// within-cluster sum of squares.
fn lloyd<R: Rng + ?Sized>(points: &[&[f64]], k: usize, rng: &mut R) -> (Vec<usize>, f64) {
    let n = points.len();
    let mut centres: Vec<Vec<f64>> = vec![points[rng.random_range(0..n)].to_vec()];
    while centres.len() < k {
        let d: Vec<f64> = points
            .iter()
            .map(|p| centres.iter().map(|c| sq_dist(p, c)).fold(f64::INFINITY, f64::min))
            .collect();
        let total: f64 = d.iter().sum();
        let pick = if total > 0.0 {
            let mut u = rng.random::<f64>() * total;
            let mut idx = n - 1;
            for (i, w) in d.iter().enumerate() {
                if u < *w {
                    idx = i;
                    break;
                }
                u -= w;
            }
            idx
        } else {
            rng.random_range(0..n)
        };
        centres.push(points[pick].to_vec());
    }
    let mut assign = vec![usize::MAX; n];
    for _ in 0..100 {
        let mut changed = false;
        for (i, p) in points.iter().enumerate() {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (j, c) in centres.iter().enumerate() {
                let d = sq_dist(p, c);
                if d < best_d {
                    best_d = d;
                    best = j;
                }
            }
            if assign[i] != best {
                assign[i] = best;
                changed = true;
            }
        }
        for (j, c) in centres.iter_mut().enumerate() {
            let members: Vec<&[f64]> = points
                .iter()
                .zip(&assign)
                .filter(|(_, a)| **a == j)
                .map(|(p, _)| *p)
                .collect();
            if !members.is_empty() {
                *c = mean_of(&members);
            }
        }
        if !changed {
            break;
        }
    }
    let wcss = points
        .iter()
        .zip(&assign)
        .map(|(p, a)| sq_dist(p, &centres[*a]))
        .sum();
    (assign, wcss)
}

/// Mean silhouette of a labelling under Euclidean distance. Singleton
/// clusters score 0.
pub fn silhouette(points: &[&[f64]], assign: &[usize]) -> f64 {
    let k = assign.iter().max().map_or(0, |m| m + 1);
    let mut total = 0.0;
    for (i, p) in points.iter().enumerate() {
        let mut sums = vec![0.0; k];
        let mut counts = vec![0usize; k];
        for (j, q) in points.iter().enumerate() {
            if i != j {
                sums[assign[j]] += sq_dist(p, q).sqrt();
                counts[assign[j]] += 1;
            }
        }
        let own = assign[i];
        if counts[own] == 0 {
            continue;
        }
        let a = sums[own] / counts[own] as f64;
        let b = (0..k)
            .filter(|c| *c != own && counts[*c] > 0)
            .map(|c| sums[c] / counts[c] as f64)
            .fold(f64::INFINITY, f64::min);
        if b.is_finite() {
            let s = (b - a) / a.max(b);
            if s.is_finite() {
                total += s;
            }
        }
    }
    total / points.len() as f64
}

/// Per-class mean images of `reference`, indexed by label.
pub fn class_centroids(reference: &LabeledDataset) -> Vec<Option<Vec<f64>>> {
    let classes = reference.items.iter().map(|i| i.label + 1).max().unwrap_or(0);
    (0..classes)
        .map(|c| {
            let members: Vec<&[f64]> = reference
                .items
                .iter()
                .filter(|i| i.label == c)
                .map(|i| i.image.pixels())
                .collect();
            (!members.is_empty()).then(|| mean_of(&members))
        })
        .collect()
}

/// k-means over the uncertain images with k picked by silhouette; each
/// cluster takes the label of the nearest class centroid unless that is
/// farther than `new_class_threshold`.
pub fn cluster_uncertain<R: Rng + ?Sized>(
    uncertain: &[UncertainItem],
    centroids: &[Option<Vec<f64>>],
    cfg: &AdaptConfig,
    rng: &mut R,
) -> Result<Vec<Cluster>> {
    if uncertain.is_empty() {
        return arg("nothing to cluster");
    }
    let points: Vec<&[f64]> = uncertain.iter().map(|u| u.image.pixels()).collect();
    let mut best_assign = vec![0; points.len()];
    let mut best_score = cfg.min_silhouette;
    for k in 2..=cfg.k_max.min(points.len() - 1) {
        let mut restart_best: Option<(Vec<usize>, f64)> = None;
        for _ in 0..3 {
            let (a, w) = lloyd(&points, k, rng);
            if restart_best.as_ref().is_none_or(|(_, bw)| w < *bw) {
                restart_best = Some((a, w));
            }
        }
        let (assign, _) = restart_best.expect("three restarts");
        let s = silhouette(&points, &assign);
        if s > best_score {
            best_score = s;
            best_assign = assign;
        }
    }
    let k = best_assign.iter().max().map_or(0, |m| m + 1);
    let mut clusters = Vec::new();
    for j in 0..k {
        let members: Vec<usize> = (0..points.len()).filter(|i| best_assign[*i] == j).collect();
        if members.is_empty() {
            continue;
        }
        let centroid = mean_of(&members.iter().map(|i| points[*i]).collect::<Vec<_>>());
        let (nearest, distance) = centroids
            .iter()
            .enumerate()
            .filter_map(|(c, m)| m.as_ref().map(|m| (c, sq_dist(&centroid, m).sqrt())))
            .fold((None, f64::INFINITY), |acc, (c, d)| if d < acc.1 { (Some(c), d) } else { acc });
        let label = match nearest {
            Some(c) if distance <= cfg.new_class_threshold => ClusterLabel::Existing(c),
            _ => ClusterLabel::NewClass,
        };
        clusters.push(Cluster {
            members,
            centroid,
            label,
            distance,
        });
    }
    Ok(clusters)
}

/// Replaces up to `floor(rate * |dataset|)` of the oldest items with items
/// from `supply`, in supply order. Returns the number replaced.
pub fn replace_data(dataset: &mut LabeledDataset, supply: &[LabeledImage], rate: f64) -> usize {
    let quota = (rate * dataset.len() as f64 + 1e-9).floor() as usize;
    let n = quota.min(supply.len()).min(dataset.len());
    dataset.items.drain(..n);
    dataset.items.extend_from_slice(&supply[..n]);
    n
}

fn pseudo_labeled(image: &Image, label: usize) -> LabeledImage {
    LabeledImage {
        image: image.clone(),
        label,
        angle: None,
        sigma: None,
    }
}

/// Retrains the active weights on the current dataset for `epochs`,
/// warm-started, and refreshes the paired autoencoder. Serving weights are
/// not touched.
pub fn retrain_dynamic(e: &mut ExpertState, epochs: usize, ae_epochs: usize, seed: u64) -> Result<()> {
    if epochs == 0 && ae_epochs == 0 {
        return Ok(());
    }
    let cfg = TrainConfig::expert(epochs, seed);
    let net = train(e.active(), &class_samples(&e.train_data), &cfg, Loss::CrossEntropy)?;
    e.set_active(net, epochs);
    let ae_cfg = TrainConfig {
        epochs: ae_epochs,
        ..autoencoder_config(seed.wrapping_add(1))
    };
    let mut ae = refresh_autoencoder(&e.domain_ae, &e.train_data, &ae_cfg)?;
    calibrate_threshold(&mut ae, &e.train_data.concat(&e.val_data), DEFAULT_PERCENTILE)?;
    e.domain_ae = ae;
    Ok(())
}

/// Human sign-off for promotions.
pub trait Approver {
    fn approval_required(&self) -> bool;
    /// Asked once per promotion decision when approval is required.
    fn approve(&mut self, expert_id: usize, candidate: &EvalReport, current: &EvalReport) -> bool;
}

/// Approval not required.
pub struct AutoApprove;

impl Approver for AutoApprove {
    fn approval_required(&self) -> bool {
        false
    }
    fn approve(&mut self, _: usize, _: &EvalReport, _: &EvalReport) -> bool {
        true
    }
}

/// Approval required and always withheld.
pub struct DenyAll;

impl Approver for DenyAll {
    fn approval_required(&self) -> bool {
        true
    }
    fn approve(&mut self, _: usize, _: &EvalReport, _: &EvalReport) -> bool {
        false
    }
}

#[derive(Debug, Clone)]
pub struct System {
    pub ensemble: Vec<ExpertState>,
    pub manager: ManagerModel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleSummary {
    pub t: usize,
    pub expert: usize,
    pub replaced_count: usize,
    pub clusters_found: usize,
    pub new_class_proposals: usize,
    /// `None` when the expert was not retrained this cycle.
    pub decision: Option<PromotionDecision>,
}

impl CycleSummary {
    pub const CSV_HEADER: &'static str = "t,expert,replaced_count,clusters_found,new_class_proposals,promotion_decision,reason";

    pub fn csv_row(&self) -> String {
        let (d, r) = match &self.decision {
            Some(d) => (d.label().to_string(), d.reason()),
            None => ("skip".to_string(), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.t, self.expert, self.replaced_count, self.clusters_found, self.new_class_proposals, d, r
        )
    }
}

/// One adaptation cycle over the decisions the serving system made on
/// `batch`. Returns one summary per expert.
pub fn adaptation_cycle(
    system: &mut System,
    batch: &LiveBatch,
    decisions: &[Decision],
    cfg: &AdaptConfig,
    approver: &mut dyn Approver,
    t: usize,
) -> Result<Vec<CycleSummary>> {
    cfg.validate()?;
    let mut summaries: Vec<CycleSummary> = system
        .ensemble
        .iter()
        .map(|e| CycleSummary {
            t,
            expert: e.id,
            replaced_count: 0,
            clusters_found: 0,
            new_class_proposals: 0,
            decision: None,
        })
        .collect();
    if cfg.is_inert() {
        return Ok(summaries);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let buf = collect_flags(batch, decisions, cfg)?;
    let mut mutated = vec![false; system.ensemble.len()];

    if cfg.retrainer && !buf.uncertain.is_empty() {
        let reference = system
            .ensemble
            .iter()
            .fold(LabeledDataset::default(), |acc, e| acc.concat(&e.train_data));
        let clusters = cluster_uncertain(&buf.uncertain, &class_centroids(&reference), cfg, &mut rng)?;
        let proposals = clusters.iter().filter(|c| c.label == ClusterLabel::NewClass).count();
        let merged: Vec<LabeledImage> = clusters
            .iter()
            .filter_map(|c| match c.label {
                ClusterLabel::Existing(l) => Some(c.members.iter().map(move |m| (*m, l))),
                ClusterLabel::NewClass => None,
            })
            .flatten()
            .map(|(m, l)| pseudo_labeled(&buf.uncertain[m].image, l))
            .collect();
        for (i, e) in system.ensemble.iter_mut().enumerate() {
            summaries[i].clusters_found = clusters.len();
            summaries[i].new_class_proposals = proposals;
            let n = replace_data(&mut e.train_data, &merged, cfg.cluster_merge_rate);
            summaries[i].replaced_count += n;
            mutated[i] |= n > 0;
        }
    }

    if cfg.overwrite_rate > 0.0 && !buf.confident.is_empty() {
        let supply: Vec<LabeledImage> = buf.confident.iter().map(|c| pseudo_labeled(&c.image, c.label)).collect();
        for (i, e) in system.ensemble.iter_mut().enumerate() {
            let n = replace_data(&mut e.train_data, &supply, cfg.overwrite_rate);
            // validation takes the samples training did not, wrapping if short
            let rest: Vec<LabeledImage> = supply.iter().cycle().skip(n).take(supply.len()).cloned().collect();
            let v = replace_data(&mut e.val_data, &rest, cfg.overwrite_rate);
            summaries[i].replaced_count += n + v;
            mutated[i] |= n + v > 0;
        }
    }

    for (i, e) in system.ensemble.iter_mut().enumerate() {
        if !mutated[i] {
            continue;
        }
        retrain_dynamic(e, cfg.retrain_epochs, cfg.autoencoder_epochs, rng.random())?;
        let current = evaluate_network(e.reserved(), &e.val_data, Some(&batch.images), &cfg.standards, "val")?;
        let candidate = evaluate_network(e.active(), &e.val_data, Some(&batch.images), &cfg.standards, "val")?;
        let required = approver.approval_required();
        let flags = PromotionFlags {
            human_approval_required: required,
            human_approved: required && approver.approve(e.id, &candidate, &current),
            performance_maximizing: cfg.performance_maximizing,
        };
        let decision = evaluate_promotion(&candidate, &current, &flags)?;
        if decision == PromotionDecision::Promote {
            e.promote(&decision)?;
        }
        summaries[i].decision = Some(decision);
    }
    Ok(summaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datagen::IMAGE_PIXELS;
    use rand_distr::{Distribution, Normal};

    fn decision(answer: Answer, confidence: f64) -> Decision {
        Decision {
            answer,
            confidence,
            chosen_expert: None,
            per_expert_scores: vec![confidence],
            retrain_signal: false,
        }
    }

    fn blob(centre: f64, n: usize, rng: &mut ChaCha8Rng) -> Vec<UncertainItem> {
        let noise = Normal::new(0.0, 0.01).unwrap();
        (0..n)
            .map(|_| {
                let px = (0..IMAGE_PIXELS)
                    .map(|_| (centre + noise.sample(rng)).clamp(0.0, 1.0))
                    .collect();
                UncertainItem {
                    image: Image::from_pixels(px).unwrap(),
                    per_expert_scores: vec![],
                }
            })
            .collect()
    }

    fn labeled(image: Image, label: usize) -> LabeledImage {
        pseudo_labeled(&image, label)
    }

    #[test]
    fn flags_partition_by_floor_and_abstain() {
        let cfg = AdaptConfig {
            confident_score_floor: 0.8,
            ..AdaptConfig::default()
        };
        let batch = LiveBatch {
            images: vec![Image::zeros(); 3],
        };
        let ds = [
            decision(Answer::Class(3), 0.95),
            decision(Answer::Abstain, 0.1),
            decision(Answer::Class(1), 0.7),
        ];
        let buf = collect_flags(&batch, &ds, &cfg).unwrap();
        assert_eq!(buf.confident.len(), 1);
        assert_eq!(buf.confident[0].label, 3);
        assert_eq!(buf.uncertain.len(), 2);
        assert!(buf.confident.iter().all(|c| c.score >= cfg.confident_score_floor));
        assert!(collect_flags(&batch, &ds[..2], &cfg).is_err());
    }

    #[test]
    fn replacement_quota() {
        let mk = |n: usize, label| LabeledDataset::new((0..n).map(|_| labeled(Image::zeros(), label)).collect());
        let supply = mk(100, 1).items;

        let mut d = mk(80, 0);
        assert_eq!(replace_data(&mut d, &supply, 0.0), 0);
        assert_eq!(d, mk(80, 0));

        assert_eq!(replace_data(&mut d, &supply, 0.1), 8);
        assert_eq!(d.len(), 80);
        assert!(d.items[..72].iter().all(|i| i.label == 0));
        assert!(d.items[72..].iter().all(|i| i.label == 1));

        let mut d = mk(80, 0);
        assert_eq!(replace_data(&mut d, &supply, 1.0), 80);
        assert!(d.items.iter().all(|i| i.label == 1));

        let mut d = mk(80, 0);
        assert_eq!(replace_data(&mut d, &supply[..3], 0.5), 3);
    }

    #[test]
    fn silhouette_picks_two_separated_blobs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut items = blob(0.1, 6, &mut rng);
        items.extend(blob(0.9, 6, &mut rng));
        let cfg = AdaptConfig::default();
        let far = vec![Some(vec![0.5; IMAGE_PIXELS])];
        let clusters = cluster_uncertain(&items, &far, &cfg, &mut rng).unwrap();
        assert_eq!(clusters.len(), 2);
        let mut sizes: Vec<usize> = clusters.iter().map(|c| c.members.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![6, 6]);
        // centroids are ~0.4 * 28 = 11.2 from the 0.5 image; threshold 12
        assert!(clusters.iter().all(|c| c.label == ClusterLabel::Existing(0)));

        let tight = AdaptConfig {
            new_class_threshold: 5.0,
            ..cfg
        };
        let clusters = cluster_uncertain(&items, &far, &tight, &mut rng).unwrap();
        assert!(clusters.iter().all(|c| c.label == ClusterLabel::NewClass));
    }

    #[test]
    fn near_duplicates_form_one_cluster_with_existing_label() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let glyph = crate::datagen::base_glyph(7).unwrap();
        let noise = Normal::new(0.0, 0.02).unwrap();
        let items: Vec<UncertainItem> = (0..8)
            .map(|_| UncertainItem {
                image: Image::from_pixels(
                    glyph
                        .pixels()
                        .iter()
                        .map(|p| (p + noise.sample(&mut rng)).clamp(0.0, 1.0))
                        .collect(),
                )
                .unwrap(),
                per_expert_scores: vec![],
            })
            .collect();
        let reference = LabeledDataset::new(
            (0..10)
                .map(|c| labeled(crate::datagen::base_glyph(c).unwrap(), c))
                .collect(),
        );
        let clusters = cluster_uncertain(&items, &class_centroids(&reference), &AdaptConfig::default(), &mut rng).unwrap();
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].members.len(), 8);
        assert_eq!(clusters[0].label, ClusterLabel::Existing(7));
    }

    #[test]
    fn silhouette_matches_hand_computation() {
        let pts: Vec<Vec<f64>> = vec![vec![0.0], vec![1.0], vec![10.0], vec![12.0]];
        let refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
        let s = silhouette(&refs, &[0, 0, 1, 1]);
        let s0 = 1.0 - 1.0 / 11.0;
        let s1 = 1.0 - 1.0 / 10.0;
        let s2 = 1.0 - 2.0 / 9.5;
        let s3 = 1.0 - 2.0 / 11.5;
        assert!((s - (s0 + s1 + s2 + s3) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn config_bounds() {
        assert!(AdaptConfig::default().validate().is_ok());
        for bad in [
            AdaptConfig { overwrite_rate: 1.5, ..AdaptConfig::default() },
            AdaptConfig { k_max: 0, ..AdaptConfig::default() },
            AdaptConfig { new_class_threshold: 0.0, ..AdaptConfig::default() },
        ] {
            assert!(bad.validate().is_err());
        }
    }
}
