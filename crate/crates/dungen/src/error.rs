use std::io;

/// Error type shared by every fallible operation in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Rejected generation or grid parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Malformed search query: endpoint out of bounds or occupied.
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    /// Malformed file content (PNG image or dataset manifest).
    #[error("format error: {0}")]
    Format(String),

    /// Dataset CSV row that violates the schema.
    #[error("schema error at line {line}, column {column}: {detail}")]
    Schema {
        line: usize,
        column: String,
        detail: String,
    },

    /// A stored record that does not describe the map it is paired with.
    #[error("record/map mismatch: {0}")]
    RecordMismatch(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn schema(line: usize, column: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Schema {
            line,
            column: column.into(),
            detail: detail.into(),
        }
    }
}
