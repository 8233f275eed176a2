//! Error type shared by every module.
//!
//! Numerical faults (CFL, multiplier overflow, monitor ceiling) are kept
//! distinct from validation faults so the CLI can map them to exit codes:
//! 2 for validation, 3 for a numerical halt.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spectrum not conjugate-symmetric: residue {residue:.3e} at k={k:?}, eta-index={eta:?}")]
    NonSymmetric {
        residue: f64,
        k: Vec<i64>,
        eta: Vec<i64>,
    },

    #[error("non-finite coefficient at flat index {index}")]
    NonFinite { index: usize },

    #[error("field size does not match grid: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("radius too large for grid: lambda*<k,eta>_max^s = {exponent:.3} exceeds {limit}")]
    RadiusTooLarge { exponent: f64, limit: f64 },

    #[error("weight alpha {alpha:?} exceeds plan order M={order}")]
    AlphaOrder { alpha: Vec<usize>, order: usize },

    #[error("CFL guard violated: |F|_max*dt/dv = {value:.3e} > {guard:.3e}")]
    CflViolation { value: f64, guard: f64 },

    #[error("blow-up monitor {value:.3e} exceeded ceiling {ceiling:.3e} at t={t:.6}")]
    BlowupCeiling { value: f64, ceiling: f64, t: f64 },

    #[error("invalid scenario: {0}")]
    Validation(String),

    #[error("snapshot format: {0}")]
    Snapshot(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("config parse: {0}")]
    Toml(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_)
            | Error::Toml(_)
            | Error::Snapshot(_)
            | Error::UnknownSuite(_)
            | Error::DimensionMismatch { .. }
            | Error::AlphaOrder { .. }
            | Error::Io(_) => 2,
            Error::NonSymmetric { .. }
            | Error::NonFinite { .. }
            | Error::RadiusTooLarge { .. }
            | Error::CflViolation { .. }
            | Error::BlowupCeiling { .. } => 3,
        }
    }
}
