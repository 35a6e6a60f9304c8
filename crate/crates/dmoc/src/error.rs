//! Error type shared by all analysis routines.

use thiserror::Error;

/// Errors produced by dataset construction and the analysis kernels.
#[derive(Debug, Error)]
pub enum DmocError {
    /// Vectors or matrices with incompatible dimensions.
    #[error("dimension mismatch: {context} (left {left}, right {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    /// A non-finite entry (NaN or infinity) found at ingestion.
    #[error("non-finite entry at row {row}, column {col} of {which}")]
    NonFinite {
        which: &'static str,
        row: usize,
        col: usize,
    },

    /// Operation requires more data points than the dataset provides.
    #[error("dataset has {n} point(s); at least {required} required")]
    TooFewPoints { n: usize, required: usize },

    /// Grid construction rejected.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Batch plan rejected.
    #[error("invalid batch size {c} for dataset of {n} points (need 2 <= C <= N)")]
    InvalidBatchSize { c: usize, n: usize },

    /// Weight function construction or evaluation rejected.
    #[error("invalid weight function: {0}")]
    InvalidRho(String),

    /// Two curves on different grids cannot be aligned.
    #[error("grid mismatch at index {index}: {left} vs {right}")]
    GridMismatch {
        index: usize,
        left: f64,
        right: f64,
    },

    /// Reference curve has zero l1 norm; relative alignment is undefined.
    #[error("reference sequence is identically zero; relative alignment undefined")]
    ZeroReference,

    /// All pairwise site distances are zero.
    #[error("no pair of sites at positive distance")]
    NoPositiveDistance,

    /// Input outside a function's domain.
    #[error("input outside domain: {0}")]
    OutOfDomain(String),

    /// Catch-all for rejected parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, DmocError>;
