use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the lab.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A text value could not be parsed as an exponent.
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// An iterative numerical method failed to reach its tolerance.
    #[error("numerical failure in {context}: {detail}")]
    Numerical { context: String, detail: String },

    /// An experiment configuration was rejected before evaluation.
    #[error("configuration error: {0}")]
    Config(String),

    /// Reading or writing an artifact failed.
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An internal consistency check failed (a bug, not a user error).
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Numerical {
            context: context.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
