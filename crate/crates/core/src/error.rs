use thiserror::Error;

/// Errors produced by parsers, solvers, oracles, and reductions.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text. `line` is 1-based within the source document.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A caller-supplied argument violates an operation's contract.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The instance lies outside the class the operation accepts.
    #[error("unsupported instance: {0}")]
    Instance(String),
    /// A size or enumeration bound was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// An internal invariant failed. Indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
