use thiserror::Error;

/// Errors raised by the verification toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(String, String),

    #[error("u_{index} = {value} is neither zero nor a unit")]
    BadUnit { index: usize, value: i64 },

    #[error("certificate failure in {step}: {detail}")]
    CertificateFailure { step: String, detail: String },

    #[error(
        "congruence failure in {step} at S^{degree}: valuation {valuation} does not exceed {bound}"
    )]
    CongruenceFailure {
        step: String,
        degree: usize,
        valuation: String,
        bound: String,
    },

    #[error("constraint violation: {}", .0.join(", "))]
    ConstraintViolation(Vec<String>),

    #[error("model failure: {0}")]
    ModelFailure(String),

    #[error("non-integral Swan conductor {0}")]
    NonIntegralSwan(String),

    /// A step that is only implemented for part of the parameter space.
    #[error("not available: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn certificate(step: &str, detail: impl Into<String>) -> Self {
        Error::CertificateFailure {
            step: step.to_string(),
            detail: detail.into(),
        }
    }

    pub(crate) fn precision(context: impl Into<String>) -> Self {
        Error::InsufficientPrecision(context.into())
    }
}
