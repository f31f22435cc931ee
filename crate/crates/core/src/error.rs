use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("subtraction underflow: {0}")]
    Underflow(String),

    #[error("value is not a nonnegative integer: {0}")]
    NonIntegral(String),

    #[error("enumeration cap exceeded: n = {n} is above the cap of {cap}")]
    CapExceeded { n: u32, cap: u32 },

    #[error("malformed input {path}: {msg}")]
    Malformed { path: PathBuf, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
