use thiserror::Error;

pub type Result<T, E = ToolkitError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum ToolkitError {
    #[error(transparent)]
    Core(#[from] kn_core::Error),
    #[error("bad JSON document: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}
