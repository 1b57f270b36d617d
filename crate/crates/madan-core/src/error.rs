//! Error surface shared by the whole core library.

/// Errors raised by tensor ops, model construction, training and analytics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Dimension/shape violation; names the operation and the offending axes.
    #[error("shape error in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    /// A caller broke an operation contract (non-scalar loss, empty batch, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// NaN or infinity surfaced where a finite value is required.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Class label outside the configured range.
    #[error("label {label} invalid for {classes} classes")]
    Label { label: u8, classes: usize },

    /// Invalid hyperparameter or generation specification.
    #[error("invalid config: {0}")]
    Config(String),

    /// Dataset unusable for the requested operation.
    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Shape {
            op,
            detail: detail.into(),
        }
    }
}
