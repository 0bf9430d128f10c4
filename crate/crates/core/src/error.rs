use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {left} cells against {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a semistandard tableau: {0}")]
    NotSemistandard(String),
    #[error("content {0:?} is not a partition")]
    NonDominantContent(Vec<usize>),
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),
    #[error("column height {k} out of range for n = {n}")]
    ColumnHeight { k: usize, n: usize },
    #[error("invalid crystal element: {0}")]
    InvalidElement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("closure exceeded node cap of {0}")]
    CapExceeded(usize),
    #[error("operator reached the frozen head; truncation too short")]
    FrozenBoundary,
    #[error("perfectness violation: {0}")]
    Perfectness(String),
    #[error("tensor product {0} is not connected")]
    Disconnected(String),
    #[error("propagation conflict: {0}")]
    Conflict(String),
    #[error("classical highest weight {0:?} is not dominant")]
    NonDominantHighest(Vec<i64>),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
