use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("arrow endpoint {index} is not a vertex (quiver has {vertices} vertices)")]
    ArrowOutOfRange { index: usize, vertices: usize },

    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension {value} at `{vertex}` exceeds the limit {limit}")]
    DimensionLimit { vertex: String, value: u64, limit: u64 },

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("{what}: search budget of {budget} exceeded")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("quiver is not a Euclidean quiver of type {0}")]
    NotEuclidean(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid bipartite setting: {0}")]
    InvalidBipartite(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("decision paths disagree: {0}")]
    CrossCheck(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
