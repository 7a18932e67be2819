use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index out of range: {0}")]
    Range(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("distance is undefined for an empty text")]
    UndefinedDistance,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("splitting unit does not divide every weight: {0}")]
    InvalidBeta(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
