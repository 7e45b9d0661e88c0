use rand::Rng;

use super::tensor::Tensor;
use crate::error::{Error, Result};

/// Valid (unpadded) 2-D convolution over a `[channels, height, width]` input.
#[derive(Debug, Clone, PartialEq)]
pub struct Conv2d {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel_size: usize,
    pub stride: usize,
    /// `[out_channels, in_channels, kernel_size, kernel_size]`, row-major.
    pub kernels: Vec<f64>,
    pub biases: Vec<f64>,
    pub kernel_velocity: Vec<f64>,
    pub bias_velocity: Vec<f64>,
}

/// Fully connected layer, `weights` is `[outputs, inputs]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense {
    pub inputs: usize,
    pub outputs: usize,
    pub weights: Vec<f64>,
    pub biases: Vec<f64>,
    pub weight_velocity: Vec<f64>,
    pub bias_velocity: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Layer {
    Conv2d(Conv2d),
    Dense(Dense),
    Relu,
    Flatten,
    Sigmoid,
}

/// Dot product with eight running sums, which keeps the adds pipelined.
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = [0.0; 8];
    let mut ca = a.chunks_exact(8);
    let mut cb = b.chunks_exact(8);
    for (x, y) in (&mut ca).zip(&mut cb) {
        let x: &[f64; 8] = x.try_into().expect("chunk of 8");
        let y: &[f64; 8] = y.try_into().expect("chunk of 8");
        for i in 0..8 {
            acc[i] += x[i] * y[i];
        }
    }
    let tail: f64 = ca.remainder().iter().zip(cb.remainder()).map(|(x, y)| x * y).sum();
    acc.iter().sum::<f64>() + tail
}

fn kaiming_uniform<R: Rng + ?Sized>(n: usize, fan_in: usize, rng: &mut R) -> Vec<f64> {
    let bound = (6.0 / fan_in as f64).sqrt();
    (0..n).map(|_| rng.random_range(-bound..bound)).collect()
}

impl Conv2d {
    pub fn new<R: Rng + ?Sized>(
        in_channels: usize,
        out_channels: usize,
        kernel_size: usize,
        stride: usize,
        rng: &mut R,
    ) -> Self {
        let n = out_channels * in_channels * kernel_size * kernel_size;
        Self {
            in_channels,
            out_channels,
            kernel_size,
            stride,
            kernels: kaiming_uniform(n, in_channels * kernel_size * kernel_size, rng),
            biases: vec![0.0; out_channels],
            kernel_velocity: vec![0.0; n],
            bias_velocity: vec![0.0; out_channels],
        }
    }

    fn output_hw(&self, h: usize, w: usize) -> Option<(usize, usize)> {
        if h < self.kernel_size || w < self.kernel_size || self.stride == 0 {
            return None;
        }
        Some((
            (h - self.kernel_size) / self.stride + 1,
            (w - self.kernel_size) / self.stride + 1,
        ))
    }

    fn forward(&self, input: &Tensor, index: usize) -> Result<Tensor> {
        let shape = input.shape();
        let (h, w) = match shape {
            [c, h, w] if *c == self.in_channels => (*h, *w),
            _ => {
                return Err(Error::Dimension {
                    layer: index,
                    detail: format!(
                        "conv2d expects [{}, h, w], got {:?}",
                        self.in_channels, shape
                    ),
                })
            }
        };
        let (oh, ow) = self.output_hw(h, w).ok_or_else(|| Error::Dimension {
            layer: index,
            detail: format!("input {h}x{w} smaller than kernel {}", self.kernel_size),
        })?;
        let patches = self.im2col(input.data(), h, w, oh, ow);
        let taps = self.in_channels * self.kernel_size * self.kernel_size;
        let n = oh * ow;
        let mut out = vec![0.0; self.out_channels * n];
        for (o, plane) in out.chunks_exact_mut(n).enumerate() {
            plane.fill(self.biases[o]);
            for (wv, row) in self.kernels[o * taps..(o + 1) * taps].iter().zip(patches.chunks_exact(n)) {
                for (d, p) in plane.iter_mut().zip(row) {
                    *d += wv * p;
                }
            }
        }
        Tensor::new(vec![self.out_channels, oh, ow], out)
    }

    /// Patch matrix with one row per (channel, ky, kx) tap and one column per
    /// output position.
    fn im2col(&self, x: &[f64], h: usize, w: usize, oh: usize, ow: usize) -> Vec<f64> {
        let (k, s) = (self.kernel_size, self.stride);
        let mut p = Vec::with_capacity(self.in_channels * k * k * oh * ow);
        for c in 0..self.in_channels {
            let xc = &x[c * h * w..(c + 1) * h * w];
            for ky in 0..k {
                for kx in 0..k {
                    for oy in 0..oh {
                        let row = &xc[(oy * s + ky) * w + kx..];
                        p.extend((0..ow).map(|ox| row[ox * s]));
                    }
                }
            }
        }
        p
    }

    fn backward(
        &self,
        input: &Tensor,
        grad_out: &Tensor,
        grads: &mut [Vec<f64>],
        need_input_grad: bool,
    ) -> Option<Tensor> {
        let (h, w) = (input.shape()[1], input.shape()[2]);
        let (oh, ow) = (grad_out.shape()[1], grad_out.shape()[2]);
        let (k, s) = (self.kernel_size, self.stride);
        let taps = self.in_channels * k * k;
        let n = oh * ow;
        let patches = self.im2col(input.data(), h, w, oh, ow);
        let g = grad_out.data();
        let (dk, db) = grads.split_at_mut(1);
        let (dk, db) = (&mut dk[0], &mut db[0]);
        let mut dpatches = if need_input_grad { vec![0.0; taps * n] } else { Vec::new() };
        for (o, go) in g.chunks_exact(n).enumerate() {
            db[o] += go.iter().sum::<f64>();
            for (r, row) in patches.chunks_exact(n).enumerate() {
                dk[o * taps + r] += dot(go, row);
            }
            if need_input_grad {
                for (wv, drow) in self.kernels[o * taps..(o + 1) * taps].iter().zip(dpatches.chunks_exact_mut(n)) {
                    for (d, gv) in drow.iter_mut().zip(go) {
                        *d += wv * gv;
                    }
                }
            }
        }
        if !need_input_grad {
            return None;
        }
        let mut dx = vec![0.0; input.len()];
        let mut rows = dpatches.chunks_exact(n);
        for c in 0..self.in_channels {
            for ky in 0..k {
                for kx in 0..k {
                    let r = rows.next().expect("one row per tap");
                    for oy in 0..oh {
                        let base = c * h * w + (oy * s + ky) * w + kx;
                        for ox in 0..ow {
                            dx[base + ox * s] += r[oy * ow + ox];
                        }
                    }
                }
            }
        }
        Some(Tensor::new(input.shape().to_vec(), dx).expect("shape preserved"))
    }
}

impl Dense {
    pub fn new<R: Rng + ?Sized>(inputs: usize, outputs: usize, rng: &mut R) -> Self {
        Self {
            inputs,
            outputs,
            weights: kaiming_uniform(inputs * outputs, inputs, rng),
            biases: vec![0.0; outputs],
            weight_velocity: vec![0.0; inputs * outputs],
            bias_velocity: vec![0.0; outputs],
        }
    }

    fn forward(&self, input: &Tensor, index: usize) -> Result<Tensor> {
        if input.shape() != [self.inputs] {
            return Err(Error::Dimension {
                layer: index,
                detail: format!(
                    "dense expects [{}], got {:?}",
                    self.inputs,
                    input.shape()
                ),
            });
        }
        let x = input.data();
        let out = self
            .weights
            .chunks_exact(self.inputs)
            .zip(&self.biases)
            .map(|(row, b)| b + dot(row, x))
            .collect();
        Ok(Tensor::vector(out))
    }

    fn backward(
        &self,
        input: &Tensor,
        grad_out: &Tensor,
        grads: &mut [Vec<f64>],
        need_input_grad: bool,
    ) -> Option<Tensor> {
        let x = input.data();
        let g = grad_out.data();
        let (dw, db) = grads.split_at_mut(1);
        for ((dw_row, gv), dbv) in dw[0].chunks_exact_mut(self.inputs).zip(g).zip(db[0].iter_mut()) {
            *dbv += gv;
            if *gv != 0.0 {
                for (d, xv) in dw_row.iter_mut().zip(x) {
                    *d += gv * xv;
                }
            }
        }
        if !need_input_grad {
            return None;
        }
        let mut dx = vec![0.0; self.inputs];
        for (row, gv) in self.weights.chunks_exact(self.inputs).zip(g) {
            if *gv != 0.0 {
                for (d, w) in dx.iter_mut().zip(row) {
                    *d += w * gv;
                }
            }
        }
        Some(Tensor::vector(dx))
    }
}

pub(crate) fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

impl Layer {
    pub fn is_parameterized(&self) -> bool {
        matches!(self, Layer::Conv2d(_) | Layer::Dense(_))
    }

    pub fn forward(&self, input: &Tensor, index: usize) -> Result<Tensor> {
        match self {
            Layer::Conv2d(c) => c.forward(input, index),
            Layer::Dense(d) => d.forward(input, index),
            Layer::Relu => {
                let mut out = input.clone();
                out.data_mut().iter_mut().for_each(|v| *v = v.max(0.0));
                Ok(out)
            }
            Layer::Sigmoid => {
                let mut out = input.clone();
                out.data_mut().iter_mut().for_each(|v| *v = sigmoid(*v));
                Ok(out)
            }
            Layer::Flatten => {
                let n = input.len();
                input.clone().reshape(vec![n])
            }
        }
    }

    /// Accumulates parameter gradients into `grads` (one buffer per
    /// parameter group, see [`Layer::params`]) and returns the gradient
    /// with respect to the layer input when requested.
    pub fn backward(
        &self,
        input: &Tensor,
        output: &Tensor,
        grad_out: &Tensor,
        grads: &mut [Vec<f64>],
        need_input_grad: bool,
    ) -> Option<Tensor> {
        match self {
            Layer::Conv2d(c) => c.backward(input, grad_out, grads, need_input_grad),
            Layer::Dense(d) => d.backward(input, grad_out, grads, need_input_grad),
            // subgradient at 0 is 0
            Layer::Relu => {
                let mut g = grad_out.clone();
                for (gv, xv) in g.data_mut().iter_mut().zip(input.data()) {
                    if *xv <= 0.0 {
                        *gv = 0.0;
                    }
                }
                Some(g)
            }
            Layer::Sigmoid => {
                let mut g = grad_out.clone();
                for (gv, y) in g.data_mut().iter_mut().zip(output.data()) {
                    *gv *= y * (1.0 - y);
                }
                Some(g)
            }
            Layer::Flatten => Some(
                grad_out
                    .clone()
                    .reshape(input.shape().to_vec())
                    .expect("flatten preserves length"),
            ),
        }
    }

    /// Parameter groups in a fixed order: weights/kernels, then biases.
    pub fn params(&self) -> Vec<&[f64]> {
        match self {
            Layer::Conv2d(c) => vec![&c.kernels, &c.biases],
            Layer::Dense(d) => vec![&d.weights, &d.biases],
            _ => Vec::new(),
        }
    }

    pub fn params_mut(&mut self) -> Vec<&mut Vec<f64>> {
        match self {
            Layer::Conv2d(c) => vec![&mut c.kernels, &mut c.biases],
            Layer::Dense(d) => vec![&mut d.weights, &mut d.biases],
            _ => Vec::new(),
        }
    }

    /// Parameter groups paired with their momentum buffers.
    pub(crate) fn params_with_velocity(&mut self) -> Vec<(&mut Vec<f64>, &mut Vec<f64>)> {
        match self {
            Layer::Conv2d(c) => vec![
                (&mut c.kernels, &mut c.kernel_velocity),
                (&mut c.biases, &mut c.bias_velocity),
            ],
            Layer::Dense(d) => vec![
                (&mut d.weights, &mut d.weight_velocity),
                (&mut d.biases, &mut d.bias_velocity),
            ],
            _ => Vec::new(),
        }
    }

    pub(crate) fn zero_grads(&self) -> Vec<Vec<f64>> {
        self.params().iter().map(|p| vec![0.0; p.len()]).collect()
    }
}
