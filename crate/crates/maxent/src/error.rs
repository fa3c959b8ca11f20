use std::fmt;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Success = 0,
    /// The command ran but the data did not conform.
    NonConforming = 1,
    /// Bad arguments or unusable input.
    Usage = 2,
    /// A resource guard refused the instance.
    ResourceGuard = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::Usage,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<maxent_core::Error> for CliError {
    fn from(e: maxent_core::Error) -> Self {
        let status = match e {
            maxent_core::Error::TooManyMicrostates { .. } => ExitStatus::ResourceGuard,
            _ => ExitStatus::Usage,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::usage(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::usage(format!("csv error: {e}"))
    }
}
