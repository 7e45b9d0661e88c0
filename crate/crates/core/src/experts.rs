//! Expert classifiers with a serving ("reserved") and a training
//! ("active") weight set, and the protocol that promotes one to the other.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::datagen::{DomainSpec, Image, LabeledDataset, LabeledImage, Splits, IMAGE_PIXELS, NUM_CLASSES};
use crate::error::{arg, Error, Result};
use crate::numcore::{argmax, softmax, train, Loss, Network, Sample, TrainConfig};
use crate::trust::{compute_trust_vector, softmax_stats, TrustVector};
use crate::worldmodel::{calibrate_threshold, train_autoencoder, AutoencoderModel, DEFAULT_PERCENTILE};

#[derive(Debug, Clone, PartialEq)]
pub struct ExpertConfig {
    pub classes: usize,
    pub cnn: TrainConfig,
    pub autoencoder: TrainConfig,
    /// Percentile of train+val reconstruction losses used as the paired
    /// autoencoder's threshold.
    pub ae_percentile: f64,
}

impl ExpertConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            classes: NUM_CLASSES,
            cnn: TrainConfig::expert(30, seed),
            autoencoder: autoencoder_config(seed.wrapping_add(1)),
            ae_percentile: DEFAULT_PERCENTILE,
        }
    }
}

/// Settings used for every autoencoder in the framework.
pub fn autoencoder_config(seed: u64) -> TrainConfig {
    TrainConfig {
        learning_rate: 0.1,
        momentum: 0.9,
        batch_size: 10,
        epochs: 40,
        seed,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExpertEvent {
    Trained,
    Retrained { epochs: usize },
    Promoted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpertState {
    pub id: usize,
    reserved: Network,
    active: Network,
    pub train_data: LabeledDataset,
    pub val_data: LabeledDataset,
    pub domain_ae: AutoencoderModel,
    events: Vec<ExpertEvent>,
}

pub(crate) fn class_samples(data: &LabeledDataset) -> Vec<Sample> {
    data.items
        .iter()
        .map(|i| Sample::class(i.image.to_tensor(), i.label))
        .collect()
}

/// `(label, probs)` of `net` on `image`; label ties go to the smaller class.
pub fn network_predict(net: &Network, image: &Image) -> Result<(usize, Vec<f64>)> {
    let logits = net.forward(&image.to_tensor())?;
    let probs = softmax(logits.data())?;
    Ok((argmax(&probs), probs))
}

/// Trains a new expert on `splits.train`; both weight sets start equal and
/// the paired autoencoder is fitted to the same split.
pub fn train_expert(id: usize, splits: &Splits, cfg: &ExpertConfig) -> Result<ExpertState> {
    let init = Network::expert_cnn(cfg.classes, &mut ChaCha8Rng::seed_from_u64(cfg.cnn.seed ^ 0xc0ff_ee00));
    let net = train(&init, &class_samples(&splits.train), &cfg.cnn, Loss::CrossEntropy)?;
    let mut ae = train_autoencoder(&splits.train, &cfg.autoencoder)?;
    calibrate_threshold(&mut ae, &splits.train.concat(&splits.val), cfg.ae_percentile)?;
    Ok(ExpertState {
        id,
        reserved: net.clone(),
        active: net,
        train_data: splits.train.clone(),
        val_data: splits.val.clone(),
        domain_ae: ae,
        events: vec![ExpertEvent::Trained],
    })
}

impl ExpertState {
    pub fn reserved(&self) -> &Network {
        &self.reserved
    }

    pub fn active(&self) -> &Network {
        &self.active
    }

    pub fn events(&self) -> &[ExpertEvent] {
        &self.events
    }

    /// Serving prediction, always from the reserved weights.
    pub fn predict(&self, image: &Image) -> Result<(usize, Vec<f64>)> {
        network_predict(&self.reserved, image)
    }

    pub fn predict_active(&self, image: &Image) -> Result<(usize, Vec<f64>)> {
        network_predict(&self.active, image)
    }

    /// Replaces the training weight set. Serving weights are untouched.
    pub(crate) fn set_active(&mut self, net: Network, epochs: usize) {
        self.active = net;
        self.events.push(ExpertEvent::Retrained { epochs });
    }

    /// Copies the active weights into the reserved set. Requires a
    /// `Promote` decision.
    pub fn promote(&mut self, decision: &PromotionDecision) -> Result<()> {
        if *decision != PromotionDecision::Promote {
            return Err(Error::State(format!(
                "expert {}: promote called with {decision:?}",
                self.id
            )));
        }
        self.reserved = self.active.clone();
        self.events.push(ExpertEvent::Promoted);
        Ok(())
    }

    /// Container: `ACLX`, id, then length-prefixed sections (reserved,
    /// active and autoencoder network blobs, autoencoder threshold, and the
    /// train and validation datasets as manifest CSV plus packed pixels).
    pub fn to_checkpoint(&self) -> Vec<u8> {
        let mut out = b"ACLX".to_vec();
        out.extend_from_slice(&(self.id as u32).to_le_bytes());
        let mut section = |bytes: &[u8]| {
            out.extend_from_slice(&(bytes.len() as u64).to_le_bytes());
            out.extend_from_slice(bytes);
        };
        section(&self.reserved.to_bytes());
        section(&self.active.to_bytes());
        section(&self.domain_ae.net.to_bytes());
        section(&self.domain_ae.threshold().unwrap_or(0.0).to_le_bytes());
        for data in [&self.train_data, &self.val_data] {
            let mut manifest = Vec::new();
            crate::datagen::write_manifest(data, &mut manifest).expect("write to Vec");
            let mut raw = Vec::new();
            crate::datagen::write_raw(data, &mut raw).expect("write to Vec");
            section(&manifest);
            section(&raw);
        }
        out
    }

    pub fn from_checkpoint(bytes: &[u8]) -> Result<Self> {
        let bad = |m: &str| Error::Format(format!("expert checkpoint: {m}"));
        if bytes.len() < 8 || &bytes[..4] != b"ACLX" {
            return Err(bad("missing ACLX magic"));
        }
        let id = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
        let mut pos = 8;
        let mut sections = Vec::new();
        while pos < bytes.len() {
            let len_end = pos + 8;
            let len = u64::from_le_bytes(
                bytes
                    .get(pos..len_end)
                    .ok_or_else(|| bad("truncated length"))?
                    .try_into()
                    .expect("8 bytes"),
            ) as usize;
            let body = bytes
                .get(len_end..len_end + len)
                .ok_or_else(|| bad("truncated section"))?;
            sections.push(body);
            pos = len_end + len;
        }
        if sections.len() != 8 {
            return Err(bad("expected 8 sections"));
        }
        let reserved = Network::from_bytes(sections[0])?;
        let active = Network::from_bytes(sections[1])?;
        let ae_net = Network::from_bytes(sections[2])?;
        let threshold = f64::from_le_bytes(sections[3].try_into().map_err(|_| bad("threshold"))?);
        let train_data = read_dataset(sections[4], sections[5])?;
        let val_data = read_dataset(sections[6], sections[7])?;
        let spec = DomainSpec::envelope_of(&train_data).ok_or_else(|| bad("empty training data"))?;
        let mut domain_ae = AutoencoderModel::new(ae_net, spec)?;
        if threshold > 0.0 {
            domain_ae.set_threshold(threshold)?;
        }
        Ok(Self {
            id,
            reserved,
            active,
            train_data,
            val_data,
            domain_ae,
            events: Vec::new(),
        })
    }
}

fn read_dataset(manifest: &[u8], raw: &[u8]) -> Result<LabeledDataset> {
    let text = std::str::from_utf8(manifest).map_err(|e| Error::Format(e.to_string()))?;
    let rows: Vec<&str> = text.lines().skip(1).collect();
    if raw.len() != rows.len() * IMAGE_PIXELS * 8 {
        return Err(Error::Format("pixel section does not match manifest".into()));
    }
    let parse_opt = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            Ok(None)
        } else {
            s.parse().map(Some).map_err(|_| Error::Format(format!("bad number {s:?}")))
        }
    };
    let mut items = Vec::with_capacity(rows.len());
    for (row, px) in rows.iter().zip(raw.chunks_exact(IMAGE_PIXELS * 8)) {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Format(format!("bad manifest row {row:?}")));
        }
        let pixels = px
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
            .collect();
        items.push(LabeledImage {
            image: Image::from_pixels(pixels)?,
            label: fields[0].parse().map_err(|_| Error::Format(format!("bad label {:?}", fields[0])))?,
            angle: parse_opt(fields[1])?,
            sigma: parse_opt(fields[2])?,
        });
    }
    Ok(LabeledDataset::new(items))
}

/// Minimum accuracy and mean confidence a weight set must show.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Standards {
    pub min_accuracy: f64,
    pub min_confidence: f64,
}

impl Default for Standards {
    fn default() -> Self {
        Self {
            min_accuracy: 0.7,
            min_confidence: 0.3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub accuracy: f64,
    pub mean_confidence: f64,
    pub meets_standards: bool,
    pub dataset_id: String,
}

impl EvalReport {
    pub fn new(accuracy: f64, mean_confidence: f64, standards: &Standards, dataset_id: impl Into<String>) -> Self {
        Self {
            accuracy,
            mean_confidence,
            meets_standards: accuracy >= standards.min_accuracy && mean_confidence >= standards.min_confidence,
            dataset_id: dataset_id.into(),
        }
    }
}

/// Accuracy of `net` on `labeled`; confidence is the mean softmax margin over
/// `confidence_images` when given, else over the labeled images.
pub fn evaluate_network(
    net: &Network,
    labeled: &LabeledDataset,
    confidence_images: Option<&[Image]>,
    standards: &Standards,
    dataset_id: &str,
) -> Result<EvalReport> {
    if labeled.is_empty() {
        return arg("evaluation set is empty");
    }
    let mut correct = 0;
    let mut margins = Vec::new();
    for item in &labeled.items {
        let (label, probs) = network_predict(net, &item.image)?;
        correct += (label == item.label) as usize;
        if confidence_images.is_none() {
            margins.push(softmax_stats(&probs)?.0);
        }
    }
    if let Some(images) = confidence_images {
        for img in images {
            let (_, probs) = network_predict(net, img)?;
            margins.push(softmax_stats(&probs)?.0);
        }
    }
    let mean_conf = if margins.is_empty() {
        0.0
    } else {
        margins.iter().sum::<f64>() / margins.len() as f64
    };
    Ok(EvalReport::new(
        correct as f64 / labeled.len() as f64,
        mean_conf,
        standards,
        dataset_id,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PromotionFlags {
    pub human_approval_required: bool,
    pub human_approved: bool,
    pub performance_maximizing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PromotionDecision {
    Promote,
    /// Number (1-3) of the first promotion condition that failed.
    Reject(u8),
}

impl PromotionDecision {
    pub fn label(&self) -> &'static str {
        match self {
            PromotionDecision::Promote => "promote",
            PromotionDecision::Reject(_) => "reject",
        }
    }

    pub fn reason(&self) -> String {
        match self {
            PromotionDecision::Promote => String::new(),
            PromotionDecision::Reject(c) => format!("condition {c}"),
        }
    }
}

/// The promotion protocol. Promote only when all hold:
///
/// 1. a human approved, or approval is not required;
/// 2. the candidate meets the standards;
/// 3. the current set does not meet them, or the candidate is more accurate
///    and performance maximizing is enabled.
pub fn evaluate_promotion(candidate: &EvalReport, current: &EvalReport, flags: &PromotionFlags) -> Result<PromotionDecision> {
    if candidate.dataset_id != current.dataset_id {
        return arg(format!(
            "reports from different datasets: {} vs {}",
            candidate.dataset_id, current.dataset_id
        ));
    }
    if flags.human_approval_required && !flags.human_approved {
        return Ok(PromotionDecision::Reject(1));
    }
    if !candidate.meets_standards {
        return Ok(PromotionDecision::Reject(2));
    }
    let better = candidate.accuracy > current.accuracy && flags.performance_maximizing;
    if current.meets_standards && !better {
        return Ok(PromotionDecision::Reject(3));
    }
    Ok(PromotionDecision::Promote)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpertOutput {
    pub expert_id: usize,
    pub label: usize,
    pub probs: Vec<f64>,
    pub trust: TrustVector,
}

/// Independent serving prediction and trust vector from every expert, in
/// ensemble order.
pub fn ensemble_predict(ensemble: &[ExpertState], image: &Image) -> Result<Vec<ExpertOutput>> {
    if ensemble.is_empty() {
        return arg("ensemble is empty");
    }
    ensemble
        .iter()
        .map(|e| {
            let (label, probs) = e.predict(image)?;
            Ok(ExpertOutput {
                expert_id: e.id,
                label,
                probs,
                trust: compute_trust_vector(e, image)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(acc: f64, pass: bool, id: &str) -> EvalReport {
        EvalReport {
            accuracy: acc,
            mean_confidence: 0.5,
            meets_standards: pass,
            dataset_id: id.into(),
        }
    }

    fn flags(req: bool, ok: bool, max: bool) -> PromotionFlags {
        PromotionFlags {
            human_approval_required: req,
            human_approved: ok,
            performance_maximizing: max,
        }
    }

    #[test]
    fn named_promotion_cases() {
        let good = report(0.9, true, "v");
        let worse = report(0.8, true, "v");
        let failing = report(0.2, false, "v");
        assert_eq!(
            evaluate_promotion(&good, &failing, &flags(true, false, true)).unwrap(),
            PromotionDecision::Reject(1)
        );
        assert_eq!(
            evaluate_promotion(&failing, &good, &flags(false, false, true)).unwrap(),
            PromotionDecision::Reject(2)
        );
        assert_eq!(
            evaluate_promotion(&good, &failing, &flags(false, false, false)).unwrap(),
            PromotionDecision::Promote
        );
        assert_eq!(
            evaluate_promotion(&good, &worse, &flags(true, true, false)).unwrap(),
            PromotionDecision::Reject(3)
        );
        assert_eq!(
            evaluate_promotion(&good, &worse, &flags(true, true, true)).unwrap(),
            PromotionDecision::Promote
        );
        assert!(evaluate_promotion(&good, &report(0.1, true, "other"), &flags(false, false, true)).is_err());
    }

    #[test]
    fn report_standards_rule() {
        let s = Standards::default();
        assert!(EvalReport::new(0.7, 0.3, &s, "x").meets_standards);
        assert!(!EvalReport::new(0.69, 0.9, &s, "x").meets_standards);
        assert!(!EvalReport::new(0.9, 0.29, &s, "x").meets_standards);
    }
}
