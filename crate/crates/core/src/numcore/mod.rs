//! Small from-scratch neural-network core: tensors, conv/dense layers,
//! backpropagation, SGD with momentum and a finite-difference checker.

mod gradcheck;
mod layers;
mod network;
mod tensor;
mod train;

pub use gradcheck::{gradient_check, random_batch, GradCheckReport, TargetSpec};
pub use layers::{Conv2d, Dense, Layer};
pub use network::{Gradients, Network};
pub use tensor::Tensor;
pub use train::{
    argmax, batch_gradients, loss_and_grad, mean_loss, softmax, train, train_logged, Loss, Sample,
    Target, TrainConfig,
};
