use thiserror::Error;

pub type Result<T, E = MsoError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum MsoError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Core(#[from] mso_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl MsoError {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        MsoError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
