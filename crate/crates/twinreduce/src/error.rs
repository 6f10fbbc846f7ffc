use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    Graph6Char { byte: u8, offset: usize },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] twinreduce_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl FormatError {
    pub(crate) fn line(line: usize, message: impl Into<String>) -> Self {
        FormatError::Line {
            line,
            message: message.into(),
        }
    }
}
