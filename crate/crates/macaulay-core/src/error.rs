use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Every operation here is defined for degree d >= 1 only.
    #[error("d must be positive")]
    InvalidDegree,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("top degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The order-ideal oracle needs C(n-1+d, d) >= a monomials to work with.
    #[error("insufficient variables: {0}")]
    InsufficientVariables(String),

    /// A proof replay produced a sub-instance that fails its own hypotheses.
    /// This flags a bug in the replay machinery, not a false lemma.
    #[error("proof replay diverged: {0}")]
    ReplayDivergence(String),

    /// An invariant the mathematics guarantees failed at runtime; always a bug.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
