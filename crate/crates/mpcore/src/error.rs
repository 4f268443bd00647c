use thiserror::Error;

/// Errors produced by the numeric kernel and everything built on top of it.
///
/// `Domain` means the requested value does not exist (pole, branch point,
/// argument outside the supported region). `NonConverged` means the value
/// exists but the algorithm could not reach the requested accuracy within
/// its budget; callers may escalate precision or term limits and retry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("did not converge: {0}")]
    NonConverged(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn non_converged(msg: impl Into<String>) -> Self {
        Error::NonConverged(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
