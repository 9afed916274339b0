use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Schema {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Math(#[from] qgeo_core::Error),
}

impl CliError {
    /// 2 for bad input or IO, 3 for mathematical domain errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::Math(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
