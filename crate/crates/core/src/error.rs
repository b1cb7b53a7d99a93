use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix")]
    Singular,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("not invariant: {0}")]
    NotInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
