//! Safety scaffolding for continual-learning image classifiers.
//!
//! The crate wires together an ensemble of expert CNNs (each with a serving
//! and a training weight set), a seven-metric trust vector per prediction,
//! a learned manager that fuses the experts, autoencoder-based domain-shift
//! detection, runtime monitors with graded reactions, and a retrainer /
//! replacer loop that adapts the experts to drifting input. The
//! [`harness`] module runs the rotated-digit experiments end to end.

pub mod adapt;
pub mod datagen;
pub mod error;
pub mod experts;
pub mod harness;
pub mod manager;
pub mod monitors;
pub mod numcore;
pub mod trust;
pub mod worldmodel;

pub use datagen::{DomainSpec, Image, LabeledDataset, LiveBatch};
pub use error::{Error, Result};
