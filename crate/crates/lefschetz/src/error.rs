use std::path::PathBuf;

use lefschetz_core::braid::BraidError;
use lefschetz_core::cover::CoverError;
use lefschetz_core::factorization::FactorizationError;
use lefschetz_core::invariants::InvariantError;
use lefschetz_core::ParamError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Stdout(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid TOML: {0}")]
    TomlRead(#[from] toml::de::Error),
    #[error("cannot write TOML: {0}")]
    TomlWrite(#[from] toml::ser::Error),
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("digest mismatch: stored {stored}, recomputed {computed}")]
    Digest { stored: String, computed: String },
    #[error("stored normal form is not left-greedy")]
    NotNormal,
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for failed checks, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Cover(_) | Error::Digest { .. } | Error::NotNormal => 1,
            Error::Invariant(InvariantError::NotRelator | InvariantError::NonIntegral { .. }) => 1,
            Error::Braid(BraidError::BlockPassFailed { .. }) => 1,
            Error::Factorization(FactorizationError::ProjectionChanged) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
