//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Hilbert-space dimension below 2 (or otherwise unusable).
    #[error("invalid dimension {0}: need N >= 2")]
    InvalidDimension(usize),

    /// Mismatched matrix/vector shapes or inconsistent dimensions.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Input fails the density-matrix invariants (Hermitian, trace one, PSD).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Input fails the observable invariants (Hermitian within tolerance).
    #[error("invalid observable: {0}")]
    InvalidObservable(String),

    /// Out-of-range argument (norms, scales, sample counts, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Observable pair with proportional Bloch vectors: the joint-bound gap
    /// degenerates to zero and the pair is rejected.
    #[error("degenerate observable pair: {0}")]
    DegeneratePair(String),

    /// Local observable set is not complete and orthonormal.
    #[error("invalid observable set: {0}")]
    InvalidObservables(String),

    /// Fixed-norm rejection sampling hit its attempt cap.
    #[error("sampling exhausted after {attempts} attempts at bloch norm {norm}")]
    SamplingExhausted { attempts: usize, norm: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
