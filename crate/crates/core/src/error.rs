use thiserror::Error;

use crate::series::SumKind;

/// Errors raised by the evaluation, certification and measurement routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested (sum, point) or (sum, operation) pairing has no
    /// implementation.
    #[error("unsupported combination: {kind:?} with {what}")]
    Unsupported { kind: SumKind, what: String },

    /// A bracketing solver was handed an interval without a sign change.
    #[error("no sign change in bracket [{lo:e}, {hi:e}] ({context})")]
    BracketFailure { lo: f64, hi: f64, context: String },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A computed quantity failed an internal consistency check.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
