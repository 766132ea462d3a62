use thiserror::Error;

use crate::report::Witness;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch { what: String, expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{operation} requires passing input; failed checks: {}", failed.join(", "))]
    Precondition { operation: &'static str, failed: Vec<String> },
    #[error("inconsistency in {check}: {witness}")]
    Inconsistency { check: String, witness: Witness },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
