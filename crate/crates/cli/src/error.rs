use std::process::ExitCode;

use arbor::LimitExceeded;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Invariant(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Guard(_) => 3,
        })
    }
}

impl From<LimitExceeded> for CliError {
    fn from(e: LimitExceeded) -> Self {
        CliError::Guard(format!("{e} (raise the limit with the matching --max-exact flag)"))
    }
}

impl From<arbor::minors::MinorError> for CliError {
    fn from(e: arbor::minors::MinorError) -> Self {
        use arbor::minors::MinorError;
        match e {
            MinorError::Limit(l) => l.into(),
            MinorError::Json(_) => CliError::Parse(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
