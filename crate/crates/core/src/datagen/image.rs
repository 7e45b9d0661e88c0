use crate::error::{arg, Result};
use crate::numcore::Tensor;

pub const IMAGE_SIDE: usize = 28;
pub const IMAGE_PIXELS: usize = IMAGE_SIDE * IMAGE_SIDE;

/// 28x28 single-channel intensity grid with values in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pixels: Vec<f64>,
}

impl Image {
    pub fn zeros() -> Self {
        Self {
            pixels: vec![0.0; IMAGE_PIXELS],
        }
    }

    pub fn from_pixels(pixels: Vec<f64>) -> Result<Self> {
        if pixels.len() != IMAGE_PIXELS {
            return arg(format!("image needs {IMAGE_PIXELS} pixels, got {}", pixels.len()));
        }
        if let Some(p) = pixels.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return arg(format!("pixel value {p} outside [0, 1]"));
        }
        Ok(Self { pixels })
    }

    /// Clamps every value into `[0, 1]`; NaN becomes 0.
    pub(crate) fn from_pixels_clamped(mut pixels: Vec<f64>) -> Self {
        debug_assert_eq!(pixels.len(), IMAGE_PIXELS);
        for p in &mut pixels {
            *p = if p.is_nan() { 0.0 } else { p.clamp(0.0, 1.0) };
        }
        Self { pixels }
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * IMAGE_SIDE + col]
    }

    pub fn mass(&self) -> f64 {
        self.pixels.iter().sum()
    }

    /// `[1, 28, 28]` network input.
    pub fn to_tensor(&self) -> Tensor {
        Tensor::new(vec![1, IMAGE_SIDE, IMAGE_SIDE], self.pixels.clone()).expect("fixed shape")
    }

    pub fn squared_distance(&self, other: &Image) -> f64 {
        self.pixels
            .iter()
            .zip(&other.pixels)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn mean_abs_diff(&self, other: &Image) -> f64 {
        self.pixels
            .iter()
            .zip(&other.pixels)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / IMAGE_PIXELS as f64
    }
}
