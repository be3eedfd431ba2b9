use thiserror::Error;

pub type Result<T, E = CrystalError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid interval [{p},{q}] for rank {rank}")]
    InvalidInterval { p: usize, q: usize, rank: usize },
    #[error("node {node} is not in the interval [{p},{q}]")]
    NodeNotInInterval { node: usize, p: usize, q: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid tensor: {0}")]
    InvalidTensor(String),
    #[error("malformed cactus word: {0}")]
    InvalidWord(String),
    #[error("component anomaly: {0}")]
    ComponentAnomaly(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance has {size} elements, over the budget of {budget} (use --force)")]
    BudgetExceeded { size: u128, budget: u128 },
}
