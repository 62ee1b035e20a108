//! Crate-wide error type.
//!
//! Three failure classes exist: a value outside the contract of an operation
//! (`Domain`), an input rejected before any computation runs (`Parse`,
//! `Bound`), and checked-arithmetic overflow (`Overflow`). The CLI maps them
//! to distinct exit codes.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates an operation's precondition.
    #[error("domain: {0}")]
    Domain(String),

    /// Input could not be parsed at all.
    #[error("parse: {0}")]
    Parse(String),

    /// A coefficient exceeds the configured input bound.
    #[error("bound: |{name}| = {value} exceeds bound {bound}")]
    Bound {
        name: &'static str,
        value: i128,
        bound: i128,
    },

    /// Checked 128-bit arithmetic overflowed.
    #[error("overflow: in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 1,
            Error::Parse(_) | Error::Bound { .. } | Error::Overflow(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
