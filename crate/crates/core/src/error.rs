use thiserror::Error;

/// Errors raised by constructors and operations when their inputs are malformed.
///
/// Search exhaustion and budget overruns are not errors; they are reported
/// through verdict types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("construction unavailable: {0}")]
    ConstructionUnavailable(String),
    #[error("group order {order} exceeds the search ceiling of {ceiling}")]
    TooLarge { order: usize, ceiling: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
