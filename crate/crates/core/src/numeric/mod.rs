//! Shared numerical primitives: activations, neuron/kernel building blocks,
//! the scaled conjugate gradient minimizer, a finite-difference gradient
//! checker, and seedable random streams.

mod activation;
mod gradient;
mod neuron;
mod rng;
mod scg;

pub use activation::ActivationKind;
pub use gradient::{finite_diff_gradient, DEFAULT_FD_STEP};
pub use neuron::{neuron_output, rbf_kernel};
pub use rng::{init_weights, RandomSource};
pub use scg::{scg_minimize, ScgConfig, ScgOutcome, StopReason};

use alloc::vec::Vec;
use thiserror::Error;

/// Errors raised by the numerical primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("spread must be positive, got {0}")]
    NonPositiveSpread(f64),
    #[error("step size must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("non-finite loss or gradient encountered during optimization")]
    NonFinite {
        /// Last iterate at which the objective was still finite.
        last_good: Vec<f64>,
    },
    #[error("objective is not finite at the starting point")]
    NonFiniteStart,
}
