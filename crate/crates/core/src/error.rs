use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("partition ({partition}) is not in {set}")]
    NotInSet { partition: String, set: &'static str },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid character label: {0}")]
    InvalidLabel(String),

    #[error("class function does not match the group context: {0}")]
    DomainMismatch(String),

    #[error("non-integral multiplicity {value} for {label}")]
    NonIntegralMultiplicity { label: String, value: String },

    #[error("negative multiplicity {value} for {label}")]
    NegativeMultiplicity { label: String, value: String },

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
