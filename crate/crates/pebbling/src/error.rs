use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Search budget ran out. `lower` and `upper` sandwich the true value;
    /// `witness` is the heaviest unsolvable configuration seen so far.
    #[error("search budget exhausted: value in [{lower}, {upper}]")]
    BudgetExceeded {
        lower: u64,
        upper: u64,
        witness: Vec<u32>,
    },

    #[error("input too large for this operation: {0}")]
    TooLarge(String),

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    /// The supplied strategies give zero weight to this vertex, so the
    /// certificate program is unbounded.
    #[error("vertex {0} is not covered by any strategy; bound is unbounded")]
    Uncovered(usize),

    #[error("witness failed verification: {0}")]
    InvalidWitness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
