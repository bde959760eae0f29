use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("component {0} of the min-max operator is +inf (column of A without finite entry)")]
    PositiveInfinity(usize),

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("{0}")]
    Token(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("real-typed vector required: {0}")]
    NotReal(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
