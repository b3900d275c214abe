use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different sessions (ring, field or order differ)")]
    SessionMismatch,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ambient rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("precondition violated: {message}")]
    Precondition {
        message: String,
        witness: Option<String>,
    },

    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("no regular sequence of length {p} found (seed {seed}, coefficient box up to {max_box})")]
    SearchExhausted { p: usize, seed: u64, max_box: i64 },

    #[error("no homotopy exists: {0}")]
    NoHomotopy(String),
}

impl Error {
    pub fn precondition(message: impl Into<String>) -> Error {
        Error::Precondition {
            message: message.into(),
            witness: None,
        }
    }

    pub fn precondition_with(message: impl Into<String>, witness: impl Into<String>) -> Error {
        Error::Precondition {
            message: message.into(),
            witness: Some(witness.into()),
        }
    }
}
