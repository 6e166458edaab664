use ospzhu_core::Error;
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("{0}")]
    Usage(String),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                Error::InvalidPair { .. }
                | Error::NotAdmissible { .. }
                | Error::Parse(_)
                | Error::CriticalLevel
                | Error::XiOutOfRange(_)
                | Error::UnknownGenerator(_)
                | Error::WeightOutOfRange(_)
                | Error::DepthOverflow { .. }
                | Error::Invalid(_),
            )
            | CliError::Usage(_) => EXIT_INVALID,
            CliError::Core(Error::OracleMismatch(_) | Error::ClosureViolation { .. } | Error::IdentityFailed(_)) => {
                EXIT_MISMATCH
            }
            _ => EXIT_FAILURE,
        }
    }
}
