use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text or JSON.
    #[error("parse error: {0}")]
    Parse(String),
    /// Inconsistent sizes, lengths or shapes.
    #[error("shape error: {0}")]
    Shape(String),
    /// Well-formed input outside the domain of an operation.
    #[error("{0}")]
    Domain(String),
    /// A representation violates the quiver relations.
    #[error("{0}")]
    Relations(String),
    /// An internal consistency check failed.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Shape(_) => 2,
            Error::Domain(_) | Error::Relations(_) | Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
