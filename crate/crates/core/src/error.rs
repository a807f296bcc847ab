use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the library and the sweep front end.
#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation
    /// (e.g. `n = 0`, `|h| >= 2`, `|z| > 1`).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested combination is not modelled (e.g. a Rindler spectrum
    /// for a massive field).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Arguments are individually valid but inconsistent with each other.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A sweep configuration is malformed. `field` names the offending key.
    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Process exit status used by the `cavity-sweep` binary.
    ///
    /// 1: configuration or I/O problem, 2: numeric validity violation.
    /// Verification failures (3) are reported by the verifier, not as errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Unsupported(_) => 2,
            Error::Argument(_) | Error::Config { .. } | Error::Io { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
