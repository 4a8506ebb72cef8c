use thiserror::Error;

/// Errors produced by graph construction, parsing, and tensor operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at line {line}")]
    SelfLoop { line: usize },

    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: String },

    #[error("non-finite entry at index {index}")]
    NonFiniteEntry { index: usize },

    #[error("invalid part sizes: {0}")]
    InvalidPartiteSpec(String),

    #[error("r = {r} exceeds vertex count n = {n}")]
    RExceedsN { r: usize, n: usize },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
