use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error in {input:?} at offset {offset}: {message}")]
    Parse {
        input: String,
        offset: usize,
        message: String,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation {0} moves points below 1")]
    NotInSInfinity(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid pipe dream: {0}")]
    InvalidPipeDream(String),
    #[error("not a face: {0}")]
    NotAFace(String),
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn parse(input: &str, offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            offset,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
