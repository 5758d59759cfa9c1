use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the exit-code contract of the command-line
/// front end: usage problems, domain violations and internal invariant
/// failures are kept apart so callers can react to each differently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `position` is a 0-based character offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A precondition of the call was not met (bad argument, cap exceeded).
    #[error("usage error: {0}")]
    Usage(String),

    /// A value lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A result that must always exist could not be produced.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
