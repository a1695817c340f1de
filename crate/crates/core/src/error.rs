//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the toolkit.
///
/// `Format` and `Input` are caller mistakes (bad file, bad argument);
/// `Capacity` and `Unsupported` mean the request is outside what the exact
/// algorithms can do at desk scale.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input, with the 1-based line it occurred on.
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// Structurally invalid argument (out-of-range vertex, size mismatch, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// The instance exceeds a hard resource cap of an exact method.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The parameter is outside the supported family (e.g. q not a prime power).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
