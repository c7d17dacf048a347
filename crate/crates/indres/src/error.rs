use std::fmt;

/// Every failure the toolkit can report. The variant decides the CLI exit path
/// and the `kind` field of machine-readable error records.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Format(_) => "format",
            Error::Domain(_) => "domain",
            Error::Precondition(_) => "precondition",
            Error::Budget(_) => "budget",
            Error::Integrity(_) => "integrity",
            Error::Consistency(_) => "consistency",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    pub(crate) fn domain(msg: impl fmt::Display) -> Self {
        Error::Domain(msg.to_string())
    }

    pub(crate) fn internal(msg: impl fmt::Display) -> Self {
        Error::Internal(msg.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
