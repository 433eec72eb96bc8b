//! Crate-wide error type shared by all modules.

/// Errors raised by dataset I/O, configuration, signal processing and the
/// numerical solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed file contents (bad magic, truncated payload, shape mismatch).
    #[error("format error: {0}")]
    Format(String),
    /// Values that violate data invariants (NaN/Inf, inconsistent shapes).
    #[error("data error: {0}")]
    Data(String),
    /// Underlying I/O failure.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    /// Invalid or missing configuration.
    #[error("config error: {0}")]
    Config(String),
    /// Invalid operation parameter.
    #[error("parameter error: {0}")]
    Param(String),
    /// Input sequence too short for the requested operation.
    #[error("length error: {0}")]
    Length(String),
    /// Numerical failure (loss of positive definiteness, singular system).
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data, 4 numerical.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) | Error::Param(_) => 2,
            Error::Format(_) | Error::Data(_) | Error::Io(_) | Error::Length(_) => 3,
            Error::Numerical(_) => 4,
        }
    }
}
