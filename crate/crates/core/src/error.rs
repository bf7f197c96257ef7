use thiserror::Error;

use crate::semiring::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The tables do not describe a total operation on `0..order`.
    #[error("malformed table: {0}")]
    Structure(String),

    #[error("semiring axioms violated ({} instance(s), first: {})", .0.violations.len(), .0.first_violation())]
    Axioms(AxiomReport),

    /// An element argument is outside the operation's domain
    /// (e.g. a non-idempotent passed where an idempotent is required).
    #[error("element {element}: {reason}")]
    Domain { element: usize, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A postcondition that the underlying mathematics guarantees did not hold.
    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("size cap exceeded: {size} elements > cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("order {order} is above the enumeration maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("unknown theorem `{0}` (expected main, main2, mainnilid or additivecom)")]
    UnknownTheorem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn domain(element: usize, reason: impl Into<String>) -> Self {
        Error::Domain {
            element,
            reason: reason.into(),
        }
    }
}
