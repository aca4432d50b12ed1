use thiserror::Error;

/// Library error type.
///
/// There are exactly two failure classes: inputs that violate a documented
/// precondition, and iterative numerics that fail to converge. Callers that
/// need to distinguish them (e.g. for exit codes) can match on the variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violated a precondition (dimension, range, normalization, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An iterative routine exhausted its iteration budget.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
