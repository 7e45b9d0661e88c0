use rand::Rng;

use super::layers::{Conv2d, Dense, Layer};
use super::tensor::Tensor;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"ACL1";

const TAG_CONV: u8 = 1;
const TAG_DENSE: u8 = 2;
const TAG_RELU: u8 = 3;
const TAG_FLATTEN: u8 = 4;
const TAG_SIGMOID: u8 = 5;

/// Ordered stack of layers evaluated front to back.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    layers: Vec<Layer>,
}

/// Per-layer parameter gradients, grouped like [`Layer::params`].
pub type Gradients = Vec<Vec<Vec<f64>>>;

impl Network {
    pub fn new(layers: Vec<Layer>) -> Self {
        Self { layers }
    }

    /// Shallow expert classifier for `[1, 28, 28]` inputs:
    /// conv 8@3x3/1, relu, conv 16@3x3/2, relu, flatten, dense 64, relu,
    /// dense `classes`.
    pub fn expert_cnn<R: Rng + ?Sized>(classes: usize, rng: &mut R) -> Self {
        Self::new(vec![
            Layer::Conv2d(Conv2d::new(1, 8, 3, 1, rng)),
            Layer::Relu,
            Layer::Conv2d(Conv2d::new(8, 16, 3, 2, rng)),
            Layer::Relu,
            Layer::Flatten,
            Layer::Dense(Dense::new(16 * 12 * 12, 64, rng)),
            Layer::Relu,
            Layer::Dense(Dense::new(64, classes, rng)),
        ])
    }

    /// Dense autoencoder 784-128-32-128-784 with a sigmoid output, taking
    /// `[1, 28, 28]` images.
    pub fn autoencoder<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(vec![
            Layer::Flatten,
            Layer::Dense(Dense::new(784, 128, rng)),
            Layer::Relu,
            Layer::Dense(Dense::new(128, 32, rng)),
            Layer::Relu,
            Layer::Dense(Dense::new(32, 128, rng)),
            Layer::Relu,
            Layer::Dense(Dense::new(128, 784, rng)),
            Layer::Sigmoid,
        ])
    }

    /// Small relu MLP: `widths[0]` inputs, relu between hidden layers,
    /// linear output.
    pub fn mlp<R: Rng + ?Sized>(widths: &[usize], rng: &mut R) -> Self {
        let mut layers = Vec::new();
        for (i, pair) in widths.windows(2).enumerate() {
            if i > 0 {
                layers.push(Layer::Relu);
            }
            layers.push(Layer::Dense(Dense::new(pair[0], pair[1], rng)));
        }
        Self::new(layers)
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layers_mut(&mut self) -> &mut [Layer] {
        &mut self.layers
    }

    /// Shape produced for an input of `shape`, checking every layer.
    pub fn output_shape(&self, shape: &[usize]) -> Result<Vec<usize>> {
        let probe = Tensor::zeros(shape.to_vec());
        Ok(self.forward(&probe)?.shape().to_vec())
    }

    pub fn forward(&self, input: &Tensor) -> Result<Tensor> {
        let mut x = input.clone();
        for (i, layer) in self.layers.iter().enumerate() {
            x = layer.forward(&x, i)?;
        }
        Ok(x)
    }

    /// Input followed by every layer's output.
    pub fn forward_trace(&self, input: &Tensor) -> Result<Vec<Tensor>> {
        let mut acts = Vec::with_capacity(self.layers.len() + 1);
        acts.push(input.clone());
        for (i, layer) in self.layers.iter().enumerate() {
            let next = layer.forward(acts.last().expect("nonempty"), i)?;
            acts.push(next);
        }
        Ok(acts)
    }

    pub fn zero_gradients(&self) -> Gradients {
        self.layers.iter().map(Layer::zero_grads).collect()
    }

    /// Backpropagates `grad_output` through a recorded trace, adding the
    /// parameter gradients into `grads`.
    pub fn backward(&self, trace: &[Tensor], grad_output: Tensor, grads: &mut Gradients) {
        let mut g = grad_output;
        // input gradients are not needed below the first parameterized layer
        let first_param = self
            .layers
            .iter()
            .position(Layer::is_parameterized)
            .unwrap_or(0);
        for i in (0..self.layers.len()).rev() {
            let need = i > first_param;
            match self.layers[i].backward(&trace[i], &trace[i + 1], &g, &mut grads[i], need) {
                Some(next) => g = next,
                None => break,
            }
        }
    }

    pub fn param_count(&self) -> usize {
        self.layers
            .iter()
            .flat_map(|l| l.params())
            .map(|p| p.len())
            .sum()
    }

    /// All parameters in layer order, flattened.
    pub fn flat_params(&self) -> Vec<f64> {
        self.layers
            .iter()
            .flat_map(|l| l.params())
            .flat_map(|p| p.iter().copied())
            .collect()
    }

    pub(crate) fn param_mut(&mut self, mut index: usize) -> Option<&mut f64> {
        for layer in &mut self.layers {
            for group in layer.params_mut() {
                if index < group.len() {
                    return Some(&mut group[index]);
                }
                index -= group.len();
            }
        }
        None
    }

    pub(crate) fn reset_momentum(&mut self) {
        for layer in &mut self.layers {
            for (_, v) in layer.params_with_velocity() {
                v.iter_mut().for_each(|x| *x = 0.0);
            }
        }
    }

    /// `v <- momentum * v - lr * g; theta <- theta + v` for every parameter.
    pub(crate) fn apply_momentum_step(&mut self, grads: &Gradients, lr: f64, momentum: f64) {
        for (layer, layer_grads) in self.layers.iter_mut().zip(grads) {
            for ((theta, v), g) in layer.params_with_velocity().into_iter().zip(layer_grads) {
                for ((t, vv), gg) in theta.iter_mut().zip(v.iter_mut()).zip(g) {
                    *vv = momentum * *vv - lr * gg;
                    *t += *vv;
                }
            }
        }
    }

    /// Versioned little-endian blob: `ACL1`, layer count, then per layer a
    /// tag, its shape fields and the `f64` parameters. Momentum buffers are
    /// not stored.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        put_u32(&mut out, self.layers.len() as u32);
        for layer in &self.layers {
            match layer {
                Layer::Conv2d(c) => {
                    out.push(TAG_CONV);
                    for v in [c.in_channels, c.out_channels, c.kernel_size, c.stride] {
                        put_u32(&mut out, v as u32);
                    }
                    put_f64s(&mut out, &c.kernels);
                    put_f64s(&mut out, &c.biases);
                }
                Layer::Dense(d) => {
                    out.push(TAG_DENSE);
                    put_u32(&mut out, d.inputs as u32);
                    put_u32(&mut out, d.outputs as u32);
                    put_f64s(&mut out, &d.weights);
                    put_f64s(&mut out, &d.biases);
                }
                Layer::Relu => out.push(TAG_RELU),
                Layer::Flatten => out.push(TAG_FLATTEN),
                Layer::Sigmoid => out.push(TAG_SIGMOID),
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, pos: 0 };
        if r.take(4)? != MAGIC {
            return Err(Error::Format("missing ACL1 magic".into()));
        }
        let count = r.u32()? as usize;
        let mut layers = Vec::with_capacity(count);
        for _ in 0..count {
            let layer = match r.take(1)?[0] {
                TAG_CONV => {
                    let in_channels = r.u32()? as usize;
                    let out_channels = r.u32()? as usize;
                    let kernel_size = r.u32()? as usize;
                    let stride = r.u32()? as usize;
                    let n = out_channels * in_channels * kernel_size * kernel_size;
                    let kernels = r.f64s(n)?;
                    let biases = r.f64s(out_channels)?;
                    Layer::Conv2d(Conv2d {
                        in_channels,
                        out_channels,
                        kernel_size,
                        stride,
                        kernels,
                        biases,
                        kernel_velocity: vec![0.0; n],
                        bias_velocity: vec![0.0; out_channels],
                    })
                }
                TAG_DENSE => {
                    let inputs = r.u32()? as usize;
                    let outputs = r.u32()? as usize;
                    let weights = r.f64s(inputs * outputs)?;
                    let biases = r.f64s(outputs)?;
                    Layer::Dense(Dense {
                        inputs,
                        outputs,
                        weights,
                        biases,
                        weight_velocity: vec![0.0; inputs * outputs],
                        bias_velocity: vec![0.0; outputs],
                    })
                }
                TAG_RELU => Layer::Relu,
                TAG_FLATTEN => Layer::Flatten,
                TAG_SIGMOID => Layer::Sigmoid,
                t => return Err(Error::Format(format!("unknown layer tag {t}"))),
            };
            layers.push(layer);
        }
        if r.pos != bytes.len() {
            return Err(Error::Format("trailing bytes after network".into()));
        }
        Ok(Self { layers })
    }
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_f64s(out: &mut Vec<u8>, vals: &[f64]) {
    for v in vals {
        out.extend_from_slice(&v.to_le_bytes());
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|e| *e <= self.bytes.len())
            .ok_or_else(|| Error::Format("truncated network blob".into()))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn f64s(&mut self, n: usize) -> Result<Vec<f64>> {
        let raw = self.take(n.checked_mul(8).ok_or_else(|| Error::Format("size overflow".into()))?)?;
        Ok(raw
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_dense_passes_input_through() {
        let mut net = Network::new(vec![Layer::Dense(Dense::new(3, 3, &mut ChaCha8Rng::seed_from_u64(0)))]);
        if let Layer::Dense(d) = &mut net.layers_mut()[0] {
            d.weights = vec![1., 0., 0., 0., 1., 0., 0., 0., 1.];
            d.biases = vec![0.0; 3];
        }
        let v = Tensor::vector(vec![0.5, -2.0, 3.25]);
        assert_eq!(net.forward(&v).unwrap(), v);
    }

    #[test]
    fn unit_kernel_conv_is_identity() {
        let mut conv = Conv2d::new(1, 1, 1, 1, &mut ChaCha8Rng::seed_from_u64(0));
        conv.kernels = vec![1.0];
        let net = Network::new(vec![Layer::Conv2d(conv)]);
        let data: Vec<f64> = (0..16).map(|i| i as f64 * 0.1).collect();
        let x = Tensor::new(vec![1, 4, 4], data).unwrap();
        assert_eq!(net.forward(&x).unwrap(), x);
    }

    #[test]
    fn relu_clamps_negatives() {
        let net = Network::new(vec![Layer::Relu]);
        let out = net.forward(&Tensor::vector(vec![-1.0, 0.0, 2.0])).unwrap();
        assert_eq!(out.data(), &[0.0, 0.0, 2.0]);
    }

    #[test]
    fn shape_mismatch_names_layer() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let net = Network::mlp(&[4, 3, 2], &mut rng);
        match net.forward(&Tensor::vector(vec![0.0; 5])) {
            Err(Error::Dimension { layer, .. }) => assert_eq!(layer, 0),
            other => panic!("expected dimension error, got {other:?}"),
        }
        let bad_hidden = Network::new(vec![
            Layer::Dense(Dense::new(4, 3, &mut rng)),
            Layer::Relu,
            Layer::Dense(Dense::new(5, 2, &mut rng)),
        ]);
        match bad_hidden.forward(&Tensor::vector(vec![0.0; 4])) {
            Err(Error::Dimension { layer, .. }) => assert_eq!(layer, 2),
            other => panic!("expected dimension error, got {other:?}"),
        }
    }

    #[test]
    fn architectures_compose() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let cnn = Network::expert_cnn(10, &mut rng);
        assert_eq!(cnn.output_shape(&[1, 28, 28]).unwrap(), vec![10]);
        let ae = Network::autoencoder(&mut rng);
        assert_eq!(ae.output_shape(&[1, 28, 28]).unwrap(), vec![784]);
    }

    #[test]
    fn blob_roundtrip_and_magic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let net = Network::expert_cnn(4, &mut rng);
        let bytes = net.to_bytes();
        assert_eq!(&bytes[..4], b"ACL1");
        assert_eq!(Network::from_bytes(&bytes).unwrap(), net);
        assert!(Network::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        assert!(Network::from_bytes(b"NOPE\0\0\0\0").is_err());
    }
}
