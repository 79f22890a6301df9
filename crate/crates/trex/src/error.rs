//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation was given arguments that violate its
    /// preconditions (bad shapes, empty inputs, out-of-range parameters).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A required configuration field was absent or inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// Numerical failure during training, with the epoch it surfaced in.
    #[error("training failed at epoch {epoch}: {reason}")]
    Training { epoch: usize, reason: String },

    /// CSV ingestion failure with a row/column diagnostic. `row` is the
    /// 1-based data-row index (the header is row 0).
    #[error("csv parse error at row {row}, column '{column}': {reason}")]
    CsvParse {
        row: usize,
        column: String,
        reason: String,
    },

    /// Header or column-kind mismatch against the declared schema.
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    /// Reference set contains (near-)duplicate rows, which would make local
    /// reachability densities unbounded.
    #[error("duplicate points in reference set: rows {row_a} and {row_b} are within {tol}")]
    DuplicatePoints { row_a: usize, row_b: usize, tol: f64 },

    /// A query degenerated numerically (e.g. zero reachability mass).
    #[error("degenerate query: {0}")]
    DegenerateQuery(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
