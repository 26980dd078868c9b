use crate::report::IdentityReport;
use thiserror::Error;

/// Errors surfaced by kernel operations.
#[derive(Debug, Error)]
pub enum KernelError {
    /// Extents of tensors, maps or spaces do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An argument is malformed (e.g. a permutation that is not a bijection).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input object is missing a piece the operation needs
    /// (absent product, wrong representation kind, zero dimension).
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A mathematical precondition failed; carries the failing reports.
    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        reports: Vec<IdentityReport>,
    },
}

impl KernelError {
    pub fn precondition(message: impl Into<String>, reports: Vec<IdentityReport>) -> Self {
        KernelError::Precondition {
            message: message.into(),
            reports,
        }
    }
}

pub type Result<T> = std::result::Result<T, KernelError>;
