use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config {path}: {message}")]
    Config { path: PathBuf, message: String },
    #[error("invalid arguments: {0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerics(#[from] qdiscord_core::Error),
    #[error("non-finite value in column {column} of row {row}")]
    NonFinite { row: usize, column: &'static str },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// Process exit status: 1 for failed checks and numerical failures, 2 for
    /// bad arguments or config, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Config { .. } | CliError::Invalid(_) => 2,
            CliError::Numerics(_) | CliError::NonFinite { .. } | CliError::Verification(_) => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
