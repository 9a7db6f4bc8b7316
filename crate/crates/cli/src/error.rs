use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(tfrde::Error),
    #[error("I/O error on {path}: {source}", path = path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit status: 1 configuration, 2 numerical failure, 3 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) => 1,
            Self::Numerical(_) => 2,
            Self::Io { .. } => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<tfrde::Error> for CliError {
    fn from(err: tfrde::Error) -> Self {
        match err {
            tfrde::Error::InvalidOrder(_) | tfrde::Error::InvalidArgument(_) => Self::Config(err.to_string()),
            other => Self::Numerical(other),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
