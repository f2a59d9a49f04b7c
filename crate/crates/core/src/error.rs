use thiserror::Error;

/// Errors surfaced by the library. Internal arithmetic invariants (e.g. a
/// quantum binomial failing to divide exactly) panic instead: they indicate
/// a bug, not a recoverable condition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("denominator vanishes at v = 1")]
    PoleAtOne,

    #[error("zero element has no leading term")]
    ZeroElement,

    #[error("mixed weights: {0}")]
    MixedWeight(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
