//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while parsing states or running checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected {expected} amplitudes, got {got}")]
    AmplitudeCount { expected: usize, got: usize },

    #[error("amplitude {index} is not finite")]
    NonFiniteAmplitude { index: usize },

    #[error("local operation determinant is {det}, not 1 (deviation {deviation:.3e})")]
    NotSpecialLinear { det: String, deviation: f64 },

    #[error("{0:?} is not a permutation of (1, 2, 3, 4)")]
    NotAPermutation([usize; 4]),

    #[error("invariant relation `{name}` violated: scaled residual {residual:.3e}")]
    RelationViolation { name: &'static str, residual: f64 },

    #[error("hyperdeterminant routes disagree (relative spread {spread:.3e}): {details}")]
    RouteDisagreement { spread: f64, details: String },

    #[error("pencil interpolation is ill-conditioned: consistency residual {residual:.3e}")]
    IllConditionedPencil { residual: f64 },

    #[error("quartic root finding failed to converge")]
    RootFindingFailed,

    #[error("exact parameter recovery unavailable: {reason}")]
    ExactRecoveryUnavailable { reason: String },

    #[error("no canonical candidate reproduces the invariants")]
    NoVerifiedCandidate,

    #[error("invalid state file: {0}")]
    InvalidStateFile(String),

    #[error("cannot embed non-finite value {0}")]
    NonFiniteEmbedding(f64),

    #[error("command requires an input state file")]
    MissingInput,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
