use thiserror::Error;

/// Errors shared by every evaluation routine in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested exactly at a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// Tolerance not reached within the configured effort budget.
    #[error("did not converge within {effort} evaluations")]
    NotConverged { effort: usize },

    /// A parameter is structurally valid but outside the supported range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An intermediate value overflowed or became NaN. Overflow is an
    /// error here, never a returned value.
    #[error("non-finite intermediate: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
