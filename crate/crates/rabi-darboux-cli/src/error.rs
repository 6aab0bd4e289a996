use std::fmt;

/// Failure classes with stable process exit codes: usage/validation errors
/// exit 1, numeric failures (poles, step underflow, failed verification)
/// exit 2, I/O problems exit 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Numeric(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numeric(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Numeric(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

impl From<rabi_darboux::Error> for CliError {
    fn from(err: rabi_darboux::Error) -> Self {
        use rabi_darboux::Error::*;
        match err {
            StepSizeUnderflow { .. }
            | PoleAt { .. }
            | DegenerateBasis { .. }
            | InsufficientSpan { .. }
            | NonUniformSampling => CliError::Numeric(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}
