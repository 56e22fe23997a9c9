use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that does not even describe a presentation: unknown ids, missing
    /// identities, conflicting table entries.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A construction produced data that contradicts one of its own checks.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("expression error at {path}: {message}")]
    Expr { path: String, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
