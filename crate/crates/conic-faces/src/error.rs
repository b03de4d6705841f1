//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input matrix violated the symmetry tolerance at construction.
    #[error("matrix is not symmetric: asymmetry {asymmetry:e} exceeds {tolerance:e}")]
    NotSymmetric { asymmetry: f64, tolerance: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Input outside the mathematical domain of the operation.
    #[error("domain violation: {0}")]
    Domain(String),

    /// A stated precondition does not hold for the given input.
    #[error("precondition violation: {0}")]
    Precondition(String),

    /// An iteration failed to converge or an internal invariant broke.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid face descriptor: {0}")]
    InvalidFace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
