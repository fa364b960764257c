use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("not a natural map: {0}")]
    NotNatural(String),
    #[error("search budget of {0} candidate assignments exhausted")]
    BudgetExhausted(u64),
    #[error("Segal condition fails at π₀: {0}")]
    SegalPi0(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("unknown reference: {0}")]
    UnknownReference(String),
}

pub type Result<T> = std::result::Result<T, Error>;
