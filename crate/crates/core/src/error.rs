use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse error category, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    Integrity,
    Resource,
    Parse,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Domain => "domain",
            ErrorKind::Integrity => "integrity",
            ErrorKind::Resource => "resource",
            ErrorKind::Parse => "parse",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the operation's domain (non-prime p, inverse of zero, cubic y, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal consistency assertion failed; results cannot be trusted.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// Enumeration cap exceeded.
    #[error("resource error: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Domain(_) => ErrorKind::Domain,
            Error::Integrity(_) => ErrorKind::Integrity,
            Error::Resource(_) => ErrorKind::Resource,
            Error::Parse(_) => ErrorKind::Parse,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
