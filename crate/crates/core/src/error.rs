use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("overlap violation: {0}")]
    Overlap(String),

    #[error("no witness found: {0}")]
    NoWitness(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
