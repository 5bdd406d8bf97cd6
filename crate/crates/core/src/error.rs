use thiserror::Error;

use crate::graph::Sign;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid edit {sign}{u} {v}: {reason}")]
    InvalidEdit {
        sign: Sign,
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("pair {u} {v} is edited more than once")]
    DuplicateEdit { u: usize, v: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// A structural precondition of an operation does not hold.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
