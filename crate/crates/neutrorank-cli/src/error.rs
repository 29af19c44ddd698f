//! CLI error taxonomy and the exit-code contract.

use thiserror::Error;

/// Errors are grouped by exit code: 2 for unreadable or malformed input,
/// 3 for well-formed input that violates a documented invariant, 4 for
/// internal failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid problem: {0}")]
    Validation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}
