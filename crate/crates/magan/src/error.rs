//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum.
#[derive(Debug, Error)]
pub enum MaganError {
    /// Tensor or layer shapes do not line up.
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    Shape {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    /// A value fell outside the mathematical domain of an operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// Invalid configuration (hyperparameters, indices, flags).
    #[error("config error: {0}")]
    Config(String),

    /// An API contract was violated (empty batch, non-scalar loss, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A file did not match its expected binary layout.
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: u64, msg: String },

    /// A text cell could not be parsed.
    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    /// Training produced a non-finite loss component.
    #[error("non-finite value in {component} at iteration {iteration}")]
    NonFinite { component: String, iteration: u64 },

    /// Pearson correlation is undefined for constant vectors.
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, MaganError>;

impl MaganError {
    pub(crate) fn shape(op: &'static str, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        MaganError::Shape {
            op,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        MaganError::Domain {
            op,
            msg: msg.into(),
        }
    }
}
