//! Rotated, noisy 28x28 digit images and the domain slices drawn from them.
//!
//! A [`DomainSpec`] names a region of the data space (classes, rotation
//! range, noise range). The same type describes the whole "real world", the
//! initial training data, and each step of a live-stream drift schedule.

mod export;
mod glyphs;
mod image;

pub use export::{write_manifest, write_pgm_grid, write_raw};
pub use image::{Image, IMAGE_PIXELS, IMAGE_SIDE};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{arg, Result};

pub const NUM_CLASSES: usize = 10;

/// Default noise band when a configuration does not override it.
pub const DEFAULT_SIGMA_RANGE: (f64, f64) = (0.0, 0.1);

#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub classes: Vec<usize>,
    pub angle_min: f64,
    pub angle_max: f64,
    pub sigma_min: f64,
    pub sigma_max: f64,
}

impl DomainSpec {
    pub fn new(classes: Vec<usize>, angles: (f64, f64), sigmas: (f64, f64)) -> Result<Self> {
        let spec = Self {
            classes,
            angle_min: angles.0,
            angle_max: angles.1,
            sigma_min: sigmas.0,
            sigma_max: sigmas.1,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// All ten digits over `[angle_min, angle_max]` with the default noise.
    pub fn digits(angle_min: f64, angle_max: f64) -> Self {
        Self::new(
            (0..NUM_CLASSES).collect(),
            (angle_min, angle_max),
            DEFAULT_SIGMA_RANGE,
        )
        .expect("valid default spec")
    }

    pub fn with_sigma(mut self, min: f64, max: f64) -> Result<Self> {
        self.sigma_min = min;
        self.sigma_max = max;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.classes.is_empty() {
            return arg("domain needs at least one class");
        }
        if let Some(c) = self.classes.iter().find(|c| **c >= NUM_CLASSES) {
            return arg(format!("class {c} outside 0..{NUM_CLASSES}"));
        }
        if !(self.angle_min <= self.angle_max) {
            return arg(format!(
                "angle_min {} exceeds angle_max {}",
                self.angle_min, self.angle_max
            ));
        }
        if !(self.sigma_min >= 0.0 && self.sigma_min <= self.sigma_max) {
            return arg(format!(
                "bad sigma range [{}, {}]",
                self.sigma_min, self.sigma_max
            ));
        }
        Ok(())
    }

    pub fn contains_angle(&self, angle: f64) -> bool {
        (self.angle_min..=self.angle_max).contains(&angle)
    }

    /// True when the two closed angle intervals share any point.
    pub fn angles_overlap(&self, other: &DomainSpec) -> bool {
        self.angle_min <= other.angle_max && other.angle_min <= self.angle_max
    }

    /// Smallest spec covering every generated item of `data`; pseudo-labeled
    /// items contribute their class only.
    pub fn envelope_of(data: &LabeledDataset) -> Option<DomainSpec> {
        let mut classes: Vec<usize> = data.items.iter().map(|i| i.label).collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.is_empty() {
            return None;
        }
        let angles: Vec<f64> = data.items.iter().filter_map(|i| i.angle).collect();
        let sigmas: Vec<f64> = data.items.iter().filter_map(|i| i.sigma).collect();
        let span = |v: &[f64]| {
            if v.is_empty() {
                (0.0, 0.0)
            } else {
                (
                    v.iter().copied().fold(f64::INFINITY, f64::min),
                    v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                )
            }
        };
        let (angle_min, angle_max) = span(&angles);
        let (sigma_min, sigma_max) = span(&sigmas);
        Some(DomainSpec {
            classes,
            angle_min,
            angle_max,
            sigma_min,
            sigma_max,
        })
    }
}

/// One dataset entry. `angle` and `sigma` are known for generated images and
/// absent for pseudo-labeled live images.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledImage {
    pub image: Image,
    pub label: usize,
    pub angle: Option<f64>,
    pub sigma: Option<f64>,
}

/// Ordered dataset; order is insertion order, oldest first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LabeledDataset {
    pub items: Vec<LabeledImage>,
}

impl LabeledDataset {
    pub fn new(items: Vec<LabeledImage>) -> Self {
        Self { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn images(&self) -> impl Iterator<Item = &Image> {
        self.items.iter().map(|i| &i.image)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.items.iter().map(|i| i.label).collect()
    }

    pub fn concat(&self, other: &LabeledDataset) -> LabeledDataset {
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        LabeledDataset { items }
    }

    /// Strips labels, returning the unlabeled batch and the labels separately.
    pub fn into_live(self) -> (LiveBatch, Vec<usize>) {
        let (images, labels) = self.items.into_iter().map(|i| (i.image, i.label)).unzip();
        (LiveBatch { images }, labels)
    }
}

/// Unlabeled images as they arrive from the live stream.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LiveBatch {
    pub images: Vec<Image>,
}

/// Rotates `image` counter-clockwise by `angle` degrees about its centre.
///
/// Inverse mapping with bilinear interpolation; source samples that fall
/// outside the grid read as 0. Whole turns return an exact copy.
pub fn rotate(image: &Image, angle: f64) -> Image {
    let turn = angle.rem_euclid(360.0);
    if turn == 0.0 {
        return image.clone();
    }
    let (sin, cos) = turn.to_radians().sin_cos();
    let c = (IMAGE_SIDE as f64 - 1.0) / 2.0;
    let src = image.pixels();
    let at = |r: isize, col: isize| -> f64 {
        if r < 0 || col < 0 || r >= IMAGE_SIDE as isize || col >= IMAGE_SIDE as isize {
            0.0
        } else {
            src[r as usize * IMAGE_SIDE + col as usize]
        }
    };
    let mut out = vec![0.0; IMAGE_PIXELS];
    for r in 0..IMAGE_SIDE {
        for col in 0..IMAGE_SIDE {
            let dx = col as f64 - c;
            let dy = r as f64 - c;
            // rows grow downward, so a visual counter-clockwise turn of the
            // output corresponds to these source coordinates
            let sx = cos * dx - sin * dy + c;
            let sy = sin * dx + cos * dy + c;
            let x0 = sx.floor();
            let y0 = sy.floor();
            let fx = sx - x0;
            let fy = sy - y0;
            let (x0, y0) = (x0 as isize, y0 as isize);
            out[r * IMAGE_SIDE + col] = at(y0, x0) * (1.0 - fx) * (1.0 - fy)
                + at(y0, x0 + 1) * fx * (1.0 - fy)
                + at(y0 + 1, x0) * (1.0 - fx) * fy
                + at(y0 + 1, x0 + 1) * fx * fy;
        }
    }
    Image::from_pixels_clamped(out)
}

/// The undistorted template for `class`.
pub fn base_glyph(class: usize) -> Result<Image> {
    if class >= NUM_CLASSES {
        return arg(format!("class {class} outside 0..{NUM_CLASSES}"));
    }
    let pixels = glyphs::GLYPHS[class].iter().map(|v| *v as f64 / 255.0).collect();
    Ok(Image::from_pixels_clamped(pixels))
}

/// Template for `class`, rotated by `angle` degrees, plus i.i.d.
/// `N(0, sigma^2)` pixel noise, clamped to `[0, 1]`.
pub fn render_digit<R: Rng + ?Sized>(class: usize, angle: f64, sigma: f64, rng: &mut R) -> Result<Image> {
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return arg(format!("sigma must be a finite value >= 0, got {sigma}"));
    }
    let rotated = rotate(&base_glyph(class)?, angle);
    if sigma == 0.0 {
        return Ok(rotated);
    }
    let noise = Normal::new(0.0, sigma).expect("sigma validated");
    let pixels = rotated
        .pixels()
        .iter()
        .map(|p| p + noise.sample(rng))
        .collect();
    Ok(Image::from_pixels_clamped(pixels))
}

fn uniform<R: Rng + ?Sized>(lo: f64, hi: f64, rng: &mut R) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.random_range(lo..=hi)
    }
}

/// `n` independent draws from `spec`: class uniform over the class set, angle
/// and sigma uniform over their ranges.
pub fn sample_dataset<R: Rng + ?Sized>(spec: &DomainSpec, n: usize, rng: &mut R) -> Result<LabeledDataset> {
    spec.validate()?;
    if n == 0 {
        return arg("sample size must be >= 1");
    }
    let mut items = Vec::with_capacity(n);
    for _ in 0..n {
        let label = spec.classes[rng.random_range(0..spec.classes.len())];
        let angle = uniform(spec.angle_min, spec.angle_max, rng);
        let sigma = uniform(spec.sigma_min, spec.sigma_max, rng);
        items.push(LabeledImage {
            image: render_digit(label, angle, sigma, rng)?,
            label,
            angle: Some(angle),
            sigma: Some(sigma),
        });
    }
    Ok(LabeledDataset { items })
}

pub const TRAIN_SIZE: usize = 80;
pub const VAL_SIZE: usize = 20;
pub const TEST_SIZE: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct Splits {
    pub train: LabeledDataset,
    pub val: LabeledDataset,
    pub test: LabeledDataset,
}

/// 80 / 20 / 1000 train, validation and test draws, each from its own
/// sub-seed taken from `rng`.
pub fn standard_splits<R: Rng + ?Sized>(spec: &DomainSpec, rng: &mut R) -> Result<Splits> {
    let seeds = [rng.next_u64(), rng.next_u64(), rng.next_u64()];
    let draw = |seed: u64, n: usize| sample_dataset(spec, n, &mut ChaCha8Rng::seed_from_u64(seed));
    Ok(Splits {
        train: draw(seeds[0], TRAIN_SIZE)?,
        val: draw(seeds[1], VAL_SIZE)?,
        test: draw(seeds[2], TEST_SIZE)?,
    })
}

/// One live-stream domain per timestep.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftSchedule {
    pub steps: Vec<DomainSpec>,
    pub images_per_step: usize,
}

impl DriftSchedule {
    pub fn new(steps: Vec<DomainSpec>, images_per_step: usize) -> Result<Self> {
        if steps.is_empty() {
            return arg("drift schedule needs at least one step");
        }
        if images_per_step == 0 {
            return arg("images_per_step must be >= 1");
        }
        for s in &steps {
            s.validate()?;
        }
        Ok(Self {
            steps,
            images_per_step,
        })
    }

    /// Step `t` draws from `[start + t * shift, start + t * shift + width]`.
    /// Angles wrap modulo 360 when the whole window does.
    pub fn sliding(
        template: &DomainSpec,
        start: f64,
        shift_per_step: f64,
        width: f64,
        timesteps: usize,
        images_per_step: usize,
    ) -> Result<Self> {
        let steps = (0..timesteps)
            .map(|t| {
                let lo = start + t as f64 * shift_per_step;
                let wraps = (lo / 360.0).floor() * 360.0;
                let (lo, hi) = if lo + width - wraps <= 360.0 {
                    (lo - wraps, lo + width - wraps)
                } else {
                    // window straddles 360: keep it contiguous above 0 next turn
                    (lo - wraps, 360.0)
                };
                DomainSpec {
                    angle_min: lo,
                    angle_max: hi,
                    ..template.clone()
                }
            })
            .collect();
        Self::new(steps, images_per_step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn zero_angle_zero_noise_is_the_template() {
        let img = render_digit(3, 0.0, 0.0, &mut rng(0)).unwrap();
        assert_eq!(img, base_glyph(3).unwrap());
    }

    #[test]
    fn full_turn_matches_zero_turn() {
        let a = render_digit(7, 0.0, 0.0, &mut rng(0)).unwrap();
        let b = render_digit(7, 360.0, 0.0, &mut rng(0)).unwrap();
        for (x, y) in a.pixels().iter().zip(b.pixels()) {
            assert!((x - y).abs() < 1e-6);
        }
    }

    #[test]
    fn quarter_turn_there_and_back() {
        let base = base_glyph(5).unwrap();
        let there = render_digit(5, 90.0, 0.0, &mut rng(0)).unwrap();
        let back = rotate(&there, -90.0);
        assert!(base.mean_abs_diff(&back) < 0.02);
        assert_ne!(there, base);
    }

    #[test]
    fn bad_class_and_sigma_rejected() {
        assert!(render_digit(10, 0.0, 0.0, &mut rng(0)).is_err());
        assert!(render_digit(1, 0.0, -0.1, &mut rng(0)).is_err());
    }

    #[test]
    fn heavy_noise_stays_in_range() {
        let img = render_digit(8, 33.0, 5.0, &mut rng(1)).unwrap();
        assert!(img.pixels().iter().all(|p| (0.0..=1.0).contains(p)));
    }

    #[test]
    fn sample_respects_angle_range() {
        let spec = DomainSpec::digits(0.0, 10.0).with_sigma(0.0, 0.0).unwrap();
        let data = sample_dataset(&spec, 100, &mut rng(2)).unwrap();
        assert_eq!(data.len(), 100);
        assert!(data.items.iter().all(|i| (0.0..=10.0).contains(&i.angle.unwrap())));
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = DomainSpec::digits(0.0, 90.0);
        let a = sample_dataset(&spec, 20, &mut rng(3)).unwrap();
        let b = sample_dataset(&spec, 20, &mut rng(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_class_balance() {
        // Binomial(1000, 0.5) 99.99% interval is roughly 500 +/- 62.
        let spec = DomainSpec::new(vec![3, 4], (0.0, 30.0), (0.0, 0.1)).unwrap();
        let data = sample_dataset(&spec, 1000, &mut rng(4)).unwrap();
        let threes = data.items.iter().filter(|i| i.label == 3).count();
        assert!((400..=600).contains(&threes), "{threes}");
        assert!(data.items.iter().all(|i| i.label == 3 || i.label == 4));
    }

    #[test]
    fn splits_have_standard_sizes() {
        let spec = DomainSpec::digits(0.0, 10.0);
        let s = standard_splits(&spec, &mut rng(5)).unwrap();
        assert_eq!((s.train.len(), s.val.len(), s.test.len()), (80, 20, 1000));
        for d in [&s.train, &s.val, &s.test] {
            assert!(d.items.iter().all(|i| (0.0..=10.0).contains(&i.angle.unwrap())));
        }
        for a in s.train.images() {
            assert!(s.test.images().all(|b| a != b));
        }
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(DomainSpec::new(vec![], (0.0, 1.0), (0.0, 0.0)).is_err());
        assert!(DomainSpec::new(vec![1], (5.0, 1.0), (0.0, 0.0)).is_err());
        assert!(DomainSpec::new(vec![1], (0.0, 1.0), (-1.0, 0.0)).is_err());
        assert!(DriftSchedule::new(vec![], 1).is_err());
    }

    #[test]
    fn sliding_schedule_wraps() {
        let s = DriftSchedule::sliding(&DomainSpec::digits(0.0, 0.0), 0.0, 10.0, 10.0, 40, 5).unwrap();
        assert_eq!(s.steps.len(), 40);
        assert_eq!((s.steps[3].angle_min, s.steps[3].angle_max), (30.0, 40.0));
        assert_eq!((s.steps[37].angle_min, s.steps[37].angle_max), (10.0, 20.0));
        for st in &s.steps {
            assert!(st.angle_min >= 0.0 && st.angle_max <= 360.0);
        }
    }
}
