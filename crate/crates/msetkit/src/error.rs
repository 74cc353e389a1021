use std::path::PathBuf;

use msetkit_core::{MSetError, MonoidError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    MSet(#[from] MSetError),
    #[error("M-set file {} refers to a different monoid than {}", mset.display(), monoid.display())]
    MonoidMismatch { mset: PathBuf, monoid: PathBuf },
    #[error("{0} disagreement(s) found")]
    Disagreement(usize),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 1 I/O, 2 validation, 3 disagreement, 4 cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io { .. } | Self::Json(_) => 1,
            Self::Monoid(MonoidError::CapExceeded { .. })
            | Self::MSet(MSetError::CapExceeded { .. } | MSetError::BoundTooSmall(_)) => 4,
            Self::Parse { .. } | Self::Monoid(_) | Self::MSet(_) | Self::MonoidMismatch { .. } => 2,
            Self::Disagreement(_) => 3,
        }
    }
}
