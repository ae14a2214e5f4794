use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {index} is not homogeneous (degrees {degrees:?} in `{text}`)")]
    Inhomogeneous {
        index: usize,
        degrees: Vec<i64>,
        text: String,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("route unavailable: {0}")]
    RouteUnavailable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
