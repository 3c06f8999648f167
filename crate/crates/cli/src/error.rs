use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Scheme(#[from] bioibe::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    /// A check or authentication that did not pass.
    #[error("{0}")]
    Refused(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Scheme(bioibe::Error::InsufficientOverlap { .. })
            | CliError::Scheme(bioibe::Error::InsufficientShares { .. }) => 3,
            CliError::Scheme(_) => 2,
            CliError::Io { .. } => 4,
            CliError::Refused(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
