use thiserror::Error;

use crate::linalg::FieldSpec;
use crate::report::VerificationReport;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("input is not a valid {}: {}", .0.object_kind, .0.summary())]
    InvalidInput(Box<VerificationReport>),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl HopfError {
    pub(crate) fn invalid(report: VerificationReport) -> Self {
        HopfError::InvalidInput(Box::new(report))
    }
}
