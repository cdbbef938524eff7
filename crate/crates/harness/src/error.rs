use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown scenario {0:?}; run `flagtwist verify --list` for the registry")]
    UnknownScenario(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Core(#[from] flagtwist_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, HarnessError>;
