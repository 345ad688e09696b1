use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad user configuration: rank out of bounds, characteristic 2, unknown selector.
    #[error("configuration error: {0}")]
    Config(String),
    /// An argument outside the domain of an operation (non-root, non-elliptic element, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal invariant failed. Always a bug or a corrupted input object.
    #[error("invariant violation: {0}")]
    Invariant(String),
    /// A work cap was hit before the computation finished.
    #[error("budget exceeded after {completed} units: {what}")]
    Budget { what: String, completed: u64 },
    /// The requested computation is not covered (e.g. closed forms outside A-D).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An oracle or table comparison disagreed.
    #[error("verification mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
