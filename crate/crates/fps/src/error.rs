//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by series operations.
///
/// Domain preconditions (zero constant terms, vanishing linear terms, mode
/// mismatches) are hard errors at the API boundary; heuristic outcomes such
/// as an inconclusive existence check are values, not errors, except where an
/// operation cannot proceed without a definite answer.
#[derive(Debug, Error)]
pub enum Error {
    /// Two series with different coefficient modes were combined.
    #[error("mode mismatch: cannot combine exact and float series")]
    ModeMismatch,

    /// Multiplicative inversion of a series whose constant term vanishes.
    #[error("zero constant term: multiplicative inverse does not exist")]
    ZeroConstantTerm,

    /// A nonunit series was required but the constant term is nonzero.
    #[error("nonzero constant term: operation requires a nonunit series (a0 = 0)")]
    NonzeroConstantTerm,

    /// Reversion of a series that is not a nonunit.
    #[error("not a nonunit: reversion requires a0 = 0")]
    NotNonunit,

    /// Compositional inversion with a vanishing linear term.
    #[error("zero linear term: no composition inverse exists when a1 = 0")]
    ZeroLinearTerm,

    /// Formal derivative order exceeds the truncation order.
    #[error("derivative order {k} exceeds truncation order {order}")]
    DerivativeOrderTooLarge { k: usize, order: usize },

    /// The general composition does not exist (existence check failed).
    #[error("composition does not exist{}", match .at_k {
        Some(k) => format!(": derivative series diverges at k = {k}"),
        None => String::new(),
    })]
    CompositionDoesNotExist { at_k: Option<usize> },

    /// The existence check could not decide either way.
    #[error("existence check inconclusive at the requested point")]
    GctInconclusive,

    /// Float-mode tail summation did not reach the requested tolerance.
    #[error("tolerance {tol:e} not met after {terms} terms of the derivative series")]
    ToleranceNotMet { tol: f64, terms: usize },

    /// Exact-mode evaluation of an infinite outer series without a
    /// registered closed form for its shifted Taylor coefficients.
    #[error("no closed form registered for exact evaluation of the outer series tail")]
    NoClosedForm,

    /// Domain classification needs the boundary flag but it is unset.
    #[error("insufficient metadata: boundary summability unknown for finite positive radius")]
    InsufficientMetadata,

    /// Every probe step left the composability domain.
    #[error("domain exit: no admissible step size keeps the base point composable")]
    DomainExit,

    /// A caller-checked precondition does not hold.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// Expression syntax error, with byte offset into the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Malformed JSON input.
    #[error("invalid series JSON: {0}")]
    Json(String),

    /// File I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
