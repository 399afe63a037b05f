//! Effort estimation for software projects with four neural-network
//! regressors and the benchmarking machinery around them.
//!
//! The crate covers the full experiment loop:
//!
//! - [`dataset`]: filtering raw project tables, banding by productivity,
//!   chronological train/test splitting, feature encoding, and a synthetic
//!   data generator for when no licensed dataset is at hand.
//! - [`numeric`]: activations, Gaussian kernels, a scaled conjugate gradient
//!   minimizer, a finite-difference gradient checker, and seedable RNG
//!   streams.
//! - [`estimators`]: the four trainable models (MLP, RBFNN, GRNN, CCNN)
//!   behind one train/predict surface, plus permutation-based input ranking.
//! - [`evaluation`]: MAR/MR accuracy metrics, k-fold machinery, and the
//!   benchmark runner producing a full dataset-by-model report.
//! - [`stats`]: Wilcoxon signed-rank comparison, a moment-based normality
//!   screen, and descriptive statistics.
//!
//! The crate is `no_std`-compatible (with `alloc`); file formats, table
//! parsing, and the command-line front end live in the companion `sdee-cli`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dataset;
pub mod estimators;
pub mod evaluation;
pub mod numeric;
pub mod stats;

mod linalg;

pub use dataset::{
    band_by_productivity, chronological_split, encode_features, filter_projects,
    generate_synthetic, Dataset, DesignMatrix, FilterSpec, ProjectRecord, Split, SyntheticSpec,
};
pub use estimators::{
    permutation_importance, train, EstimatorConfig, EstimatorKind, EstimatorModel, Prediction,
    SignificanceRanking,
};
pub use evaluation::{
    classify_bias, kfold_indices, mar, mr, run_benchmark, BenchmarkOptions, BenchmarkReport,
    BiasVerdict, MetricResult,
};
pub use numeric::{scg_minimize, RandomSource, ScgConfig};
pub use stats::{descriptive_stats, normality_check, wilcoxon_signed_rank};
