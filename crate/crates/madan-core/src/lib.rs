//! Domain-adaptive oil-palm patch classification and detection.
//!
//! The pipeline trains a small convolutional classifier on labelled 17×17
//! patches from a source image and adapts it to an unlabelled target image:
//!
//! * a batch+instance normalization (BIN) feature extractor,
//! * two adversarial domain discriminators driven through a gradient
//!   reversal layer,
//! * feature-level and entropy-level attention derived from the
//!   discriminator confidences,
//! * an attention-weighted minimum-entropy regularizer,
//! * sliding-window scene inference with IOU-based box merging,
//! * detection scoring and per-channel Gaussian feature-divergence
//!   diagnostics.
//!
//! Everything runs on the CPU over a minimal reverse-mode autodiff engine
//! ([`autodiff`]); training is deterministic for a fixed seed.

pub mod autodiff;
pub mod data;
pub mod detect;
pub mod error;
pub mod eval;
pub mod layers;
pub mod losses;
pub mod network;
pub mod optim;
pub mod rng;
pub mod tensor;
pub mod train;

pub use error::{Error, Result};
pub use tensor::Tensor;
