use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Ring(#[from] ringlat::Error),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    /// 2 for bad input or unmet preconditions, 3 for size limits, 1 for
    /// failed verification.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Ring(e) if e.is_size_limit() => 3,
            CliError::Ring(e) if e.is_verification_failure() => 1,
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}
