use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// Tail could not be certified within the term budget.
    #[error("budget exceeded after {terms} terms; best tail bound {achieved:e}")]
    Budget { terms: u64, achieved: f64 },

    #[error("rejected input: {0}")]
    RejectedInput(String),

    #[error("index {index} exceeds the supported maximum {max}")]
    IndexTooLarge { index: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn rejected(msg: impl Into<String>) -> Error {
    Error::RejectedInput(msg.into())
}
