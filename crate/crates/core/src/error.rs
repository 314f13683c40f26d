use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum FrameError {
    #[error("number of spins must be at least 1")]
    ZeroSpins,

    #[error("irrep degree 2j = {two_j} exceeds the supported maximum of 64")]
    DegreeOverflow { two_j: u32 },

    #[error("explicit-matrix path limited to N <= 4 spins, got N = {n_spins}")]
    DimensionGuard { n_spins: u32 },

    #[error("multiplicity check requires 3 <= N <= 4, got N = {n_spins}")]
    MultiplicityRange { n_spins: u32 },

    #[error("design certification failed: residual {residual:.3e} exceeds {tolerance:.1e}")]
    Certification { residual: f64, tolerance: f64 },

    #[error("trial count must be at least 1")]
    ZeroTrials,

    #[error("design file does not match requested spin count: file has N = {file}, expected N = {expected}")]
    DesignMismatch { file: u32, expected: u32 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("design file parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FrameError>;
