use thiserror::Error;

/// Errors produced by library operations.
///
/// The three variants mirror the three failure exit codes of the
/// command-line tool: bad or inconsistent input, input outside an
/// operation's domain, and a violated structural guarantee (which
/// always indicates a bug somewhere).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }

    pub fn violation(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }
}
