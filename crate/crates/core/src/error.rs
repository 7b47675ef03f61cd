use thiserror::Error;

/// Errors reported by validation, arithmetic, and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid c-matrix: {0}")]
    InvalidCMatrix(String),

    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid interval representation: {0}")]
    InvalidRep(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid partition or chain: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range (< {bound} expected)")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("rank {n} exceeds the enumeration bound {bound}; raise the bound to allow larger instances")]
    BoundExceeded { n: usize, bound: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("not a c-matrix: {0}")]
    NotCMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
