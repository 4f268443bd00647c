//! Library half of the `lerch-verify` binary.
//!
//! Everything the command-line front end does lives here so integration
//! tests can drive the pieces directly: configuration resolution
//! ([`config`]), the verification runner ([`runner`]), report writers
//! ([`report`]), ad-hoc evaluation ([`evalcmd`]), and figure-data
//! sampling ([`figure`]).

pub mod config;
pub mod evalcmd;
pub mod figure;
pub mod globs;
pub mod report;
pub mod runner;
pub mod textfmt;

use std::fmt;

/// Exit codes promised by the interface contract.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED_CHECKS: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
    pub const EVAL_DOMAIN: i32 = 4;
}

/// Command-level failure, carrying the exit code it maps to.
#[derive(Debug)]
pub enum CmdError {
    /// Bad flags, malformed config, unknown names: exit 2.
    Usage(String),
    /// Filesystem trouble while writing artifacts: exit 3.
    Io(String),
    /// A mathematical precondition was violated in `eval`: exit 4.
    Domain(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => exit::USAGE,
            CmdError::Io(_) => exit::IO,
            CmdError::Domain(_) => exit::EVAL_DOMAIN,
        }
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Usage(m) | CmdError::Io(m) | CmdError::Domain(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CmdError {}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e.to_string())
    }
}
