use thiserror::Error;

use crate::half::HalfInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("invalid fractional matching: {0}")]
    InvalidMatching(String),

    #[error("fractional matching is not optimal: value {value}, optimum {optimum}")]
    NotOptimal { value: HalfInt, optimum: HalfInt },

    #[error("exhaustive oracle budget exceeded: {edges} edges (limit {limit})")]
    EdgeBudget { edges: usize, limit: usize },

    #[error("enumeration budget exceeded: order {order} (limit {limit})")]
    EnumerationBudget { order: usize, limit: usize },

    #[error("invalid sample specification: {0}")]
    InvalidSample(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
