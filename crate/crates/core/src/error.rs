use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex} rejected")]
    LoopRejected { line: usize, vertex: usize },
    #[error("line {line}: vertex id {vertex} out of range for order {order}")]
    Range {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("vertex set does not dominate the graph (vertex {undominated} is undominated)")]
    NotDominating { undominated: usize },
    #[error("dominating set has size {size} but the domination number is {gamma}")]
    NotMinimum { size: usize, gamma: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("domination number is not proven optimal: {0}")]
    Unproven(String),
    #[error("check not applicable: {0}")]
    NotApplicable(String),
    #[error("reproduction mismatch: {0}")]
    ReproductionFailure(String),
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
