use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("missing unit: {0}")]
    MissingUnit(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A structure failed its own axiom suite; the message names the first witness.
    #[error("certification failed: {0}")]
    Uncertified(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for errors caused by unreadable or malformed input.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
