use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("definition error: {0}")]
    Definition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    /// The depth cap of the word problem was reached with unresolved states.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("{what} exceeded cap of {limit}")]
    CapExceeded { what: &'static str, limit: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize) -> Self {
        Error::CapExceeded {
            what,
            limit: limit as u64,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
