//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument left the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Möbius denominator fell below the singularity threshold.
    #[error("singularity: {0}")]
    Singularity(String),

    /// A matrix violated the spectral-radius precondition of the calculus.
    #[error("spectral domain error: {0}")]
    SpectralDomain(String),

    /// Eigenvalue clusters could not be separated at the requested tolerance.
    #[error("cluster resolution error: {0}")]
    ClusterResolution(String),

    /// The requested wavelet system does not support the operation.
    #[error("unsupported system: {0}")]
    UnsupportedSystem(String),

    /// A stated precondition was violated by the data.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A Heisenberg-box operation would overflow its grid box.
    #[error("box size error: {0}")]
    BoxSize(String),

    /// The symplectic element is not in a supported generator family.
    #[error("generator decomposition required: {0}")]
    DecompositionRequired(String),

    /// A map was required to keep the closed unit disk but exits it.
    #[error("disk violation: {0}")]
    DiskViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
