//! The seven per-prediction trust metrics.
//!
//! 1. reconstruction loss of the expert's paired autoencoder
//! 2. earth mover's distance to the nearest training image
//! 3. k-nearest-neighbour agreement with the predicted label
//! 4. gap between the two largest softmax values
//! 5. variation ratio of the softmax
//! 6. softmax entropy
//! 7. the full softmax vector

use crate::datagen::{Image, LabeledDataset, IMAGE_SIDE};
use crate::error::{arg, Error, Result};
use crate::experts::ExpertState;
use crate::numcore::argmax;
use crate::worldmodel::{reconstruction_loss, AutoencoderModel};

/// Neighbour count for metric 3.
pub const DEFAULT_K: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct TrustVector {
    pub ae_loss: f64,
    pub emd_nn: f64,
    pub knn_agree: u8,
    pub softmax_margin: f64,
    pub variation_ratio: f64,
    pub entropy: f64,
    pub class_softmax: Vec<f64>,
}

impl TrustVector {
    /// Metrics 1-6 followed by the softmax vector, width `6 + C`.
    pub fn features(&self) -> Vec<f64> {
        let mut f = vec![
            self.ae_loss,
            self.emd_nn,
            self.knn_agree as f64,
            self.softmax_margin,
            self.variation_ratio,
            self.entropy,
        ];
        f.extend_from_slice(&self.class_softmax);
        f
    }

    pub fn csv_header(classes: usize) -> String {
        let mut h = String::from("ae_loss,emd_nn,knn_agree,margin,varratio,entropy");
        for c in 0..classes {
            h.push_str(&format!(",p{c}"));
        }
        h
    }

    pub fn csv_row(&self) -> String {
        self.features()
            .iter()
            .enumerate()
            .map(|(i, v)| if i == 2 { format!("{}", *v as u8) } else { v.to_string() })
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn marginals(image: &Image) -> Result<(Vec<f64>, Vec<f64>)> {
    let mass = image.mass();
    if !(mass > 0.0) {
        return Err(Error::DegenerateInput("image has zero total mass".into()));
    }
    let mut rows = vec![0.0; IMAGE_SIDE];
    let mut cols = vec![0.0; IMAGE_SIDE];
    for r in 0..IMAGE_SIDE {
        for c in 0..IMAGE_SIDE {
            let v = image.get(r, c) / mass;
            rows[r] += v;
            cols[c] += v;
        }
    }
    Ok((rows, cols))
}

/// Exact 1-D W1 between two unit-mass histograms on unit-spaced bins.
pub fn wasserstein_1d(a: &[f64], b: &[f64]) -> f64 {
    let mut cdf = 0.0;
    let mut total = 0.0;
    for (x, y) in a.iter().zip(b) {
        cdf += x - y;
        total += cdf.abs();
    }
    total
}

/// Sum of the row-marginal and column-marginal 1-D Wasserstein distances of
/// the mass-normalised images, in pixels. A lower bound on the full 2-D EMD.
pub fn emd_distance(a: &Image, b: &Image) -> Result<f64> {
    let (ra, ca) = marginals(a)?;
    let (rb, cb) = marginals(b)?;
    Ok(wasserstein_1d(&ra, &rb) + wasserstein_1d(&ca, &cb))
}

/// Training indices ordered by Euclidean distance to `image`; equal
/// distances are ordered by label so the result ignores dataset order.
fn nearest(image: &Image, train: &LabeledDataset, k: usize) -> Vec<(f64, usize, usize)> {
    let mut d: Vec<(f64, usize, usize)> = train
        .items
        .iter()
        .enumerate()
        .map(|(i, item)| (image.squared_distance(&item.image), item.label, i))
        .collect();
    d.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    d.truncate(k);
    d
}

/// Majority label among the `k` nearest training images; ties go to the
/// smaller class id.
pub fn knn_label(image: &Image, train: &LabeledDataset, k: usize) -> Result<usize> {
    if k == 0 || train.len() < k {
        return arg(format!("k = {k} needs 1 <= k <= {}", train.len()));
    }
    let neighbours = nearest(image, train, k);
    let classes = neighbours.iter().map(|n| n.1).max().expect("k >= 1") + 1;
    let mut votes = vec![0usize; classes];
    for n in &neighbours {
        votes[n.1] += 1;
    }
    let mut best = 0;
    for (c, v) in votes.iter().enumerate() {
        if *v > votes[best] {
            best = c;
        }
    }
    Ok(best)
}

/// 1 when the k-NN majority label equals `predicted`.
pub fn knn_agreement(image: &Image, train: &LabeledDataset, k: usize, predicted: usize) -> Result<u8> {
    Ok((knn_label(image, train, k)? == predicted) as u8)
}

/// `(margin, variation_ratio, entropy)` of a probability vector.
pub fn softmax_stats(probs: &[f64]) -> Result<(f64, f64, f64)> {
    if probs.is_empty() || probs.iter().any(|p| !(p.is_finite() && *p >= 0.0)) {
        return arg("probabilities must be finite and nonnegative");
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > 1e-6 {
        return arg(format!("probabilities sum to {sum}, expected 1"));
    }
    let top = argmax(probs);
    let first = probs[top];
    let second = probs
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != top)
        .map(|(_, p)| *p)
        .fold(0.0, f64::max);
    let entropy = -probs
        .iter()
        .filter(|p| **p > 0.0)
        .map(|p| p * p.ln())
        .sum::<f64>();
    Ok((first - second, 1.0 - first, entropy.max(0.0)))
}

/// Trust vector for one prediction, from its parts.
pub fn trust_vector(
    image: &Image,
    probs: &[f64],
    train: &LabeledDataset,
    domain_ae: &AutoencoderModel,
    k: usize,
) -> Result<TrustVector> {
    let (softmax_margin, variation_ratio, entropy) = softmax_stats(probs)?;
    let predicted = argmax(probs);
    if train.is_empty() {
        return arg("expert has no training data");
    }
    let nn = nearest(image, train, 1)[0].2;
    Ok(TrustVector {
        ae_loss: reconstruction_loss(domain_ae, image)?,
        emd_nn: emd_distance(image, &train.items[nn].image)?,
        knn_agree: knn_agreement(image, train, k.min(train.len()), predicted)?,
        softmax_margin,
        variation_ratio,
        entropy,
        class_softmax: probs.to_vec(),
    })
}

/// Trust vector of the expert's serving prediction on `image`.
pub fn compute_trust_vector(expert: &ExpertState, image: &Image) -> Result<TrustVector> {
    let (_, probs) = expert.predict(image)?;
    trust_vector(image, &probs, &expert.train_data, &expert.domain_ae, DEFAULT_K)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datagen::{LabeledImage, IMAGE_PIXELS};

    fn delta(r: usize, c: usize) -> Image {
        let mut px = vec![0.0; IMAGE_PIXELS];
        px[r * IMAGE_SIDE + c] = 1.0;
        Image::from_pixels(px).unwrap()
    }

    fn item(image: Image, label: usize) -> LabeledImage {
        LabeledImage {
            image,
            label,
            angle: None,
            sigma: None,
        }
    }

    #[test]
    fn shifted_delta_costs_one_pixel() {
        assert_eq!(emd_distance(&delta(0, 0), &delta(0, 1)).unwrap(), 1.0);
        assert_eq!(emd_distance(&delta(3, 3), &delta(3, 3)).unwrap(), 0.0);
        assert_eq!(emd_distance(&delta(0, 0), &delta(2, 5)).unwrap(), 7.0);
    }

    #[test]
    fn empty_image_is_degenerate() {
        assert!(matches!(
            emd_distance(&Image::zeros(), &delta(1, 1)),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn softmax_stat_closed_forms() {
        let (m, v, e) = softmax_stats(&[0.1; 10]).unwrap();
        assert!(m.abs() < 1e-12);
        assert!((v - 0.9).abs() < 1e-12);
        assert!((e - 10f64.ln()).abs() < 1e-9);

        let mut one_hot = vec![0.0; 10];
        one_hot[4] = 1.0;
        assert_eq!(softmax_stats(&one_hot).unwrap(), (1.0, 0.0, 0.0));

        let (m, v, e) = softmax_stats(&[0.7, 0.2, 0.1]).unwrap();
        assert!((m - 0.5).abs() < 1e-12);
        assert!((v - 0.3).abs() < 1e-12);
        assert!((e - 0.801_818_4).abs() < 1e-6);

        assert!(softmax_stats(&[0.5, 0.6]).is_err());
        assert!(softmax_stats(&[-0.5, 1.5]).is_err());
    }

    #[test]
    fn knn_exact_match_and_ties() {
        let a = crate::datagen::base_glyph(4).unwrap();
        let train = LabeledDataset::new(vec![
            item(a.clone(), 4),
            item(crate::datagen::base_glyph(7).unwrap(), 7),
        ]);
        assert_eq!(knn_agreement(&a, &train, 1, 4).unwrap(), 1);
        assert_eq!(knn_agreement(&a, &train, 1, 7).unwrap(), 0);

        // two votes each for 2 and 9, one for 5
        let q = delta(10, 10);
        let train = LabeledDataset::new(vec![
            item(delta(10, 11), 9),
            item(delta(10, 12), 2),
            item(delta(11, 10), 9),
            item(delta(12, 10), 2),
            item(delta(9, 9), 5),
            item(delta(0, 0), 9),
        ]);
        assert_eq!(knn_label(&q, &train, 5).unwrap(), 2);
        assert_eq!(knn_agreement(&q, &train, 5, 2).unwrap(), 1);
        assert!(knn_label(&q, &train, 7).is_err());
    }
}
