//! Error-to-exit-code mapping: 0 success, 1 tolerance-compare mismatch,
//! 2 configuration error, 3 internal numerical failure.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent configuration (also covers I/O on the
    /// config or reference files). Exit code 2.
    Config(String),
    /// Numerical failure inside the core library (eigensolver
    /// non-convergence, quadrature budget). Exit code 3.
    Numerical(isodistill_core::Error),
    /// A `--tolerance-compare` run found a difference. Exit code 1.
    CompareMismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CompareMismatch(_) => 1,
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Numerical(e) => write!(f, "numerical failure: {e}"),
            CliError::CompareMismatch(msg) => write!(f, "tolerance-compare mismatch: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<isodistill_core::Error> for CliError {
    fn from(e: isodistill_core::Error) -> Self {
        match e {
            // parameter and state validation failures are configuration
            // problems from the CLI's point of view
            isodistill_core::Error::NonConvergence { .. }
            | isodistill_core::Error::QuadratureFailure { .. } => CliError::Numerical(e),
            other => CliError::Config(other.to_string()),
        }
    }
}
