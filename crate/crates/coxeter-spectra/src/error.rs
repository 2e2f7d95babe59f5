//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A word, index, or matrix failed validation against its ambient system.
    #[error("validation error: {0}")]
    Validation(String),

    /// A rewriting step does not match the word at the designated position.
    #[error("step not applicable at position {pos}: {reason}")]
    StepMismatch { pos: usize, reason: String },

    /// An operation was invoked on a Coxeter family it is not defined for.
    #[error("unsupported system for this operation: {0}")]
    UnsupportedSystem(String),

    /// Group enumeration would exceed the configured cap.
    #[error("group order exceeds enumeration cap ({cap})")]
    CapExceeded { cap: usize },

    /// Polynomials over different variable counts were combined.
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    /// Tuples of different lengths were compared.
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    /// A matrix argument is not an involution (A² ≠ I).
    #[error("matrix is not an involution")]
    NotInvolution,

    /// A float-path argument violated its declared tolerance.
    #[error("tolerance violation: {0}")]
    ToleranceViolation(String),

    /// An exact-arithmetic operation received a floating-point representation.
    #[error("operation requires an exact representation")]
    NotExact,

    /// A numeric hypothesis of a theorem-backed check failed; reported, never guessed.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// Two quantities that must agree by construction did not.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
