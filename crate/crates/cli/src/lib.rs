//! Parsing, serialization and rendering behind the `trace-divisors` binary.

pub mod commands;
pub mod json;
pub mod names;
pub mod render;
pub mod sets;

use thiserror::Error;

/// Largest `k` accepted on the command line.
pub const MAX_K: u32 = 500;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] trace_divisors::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn check_k(k: u32) -> CliResult<()> {
    if k == 0 || k > MAX_K {
        return Err(CliError::usage(format!(
            "k must be in 1..={MAX_K}, got {k}"
        )));
    }
    Ok(())
}

pub fn check_range(k_min: u32, k_max: u32) -> CliResult<()> {
    check_k(k_min)?;
    check_k(k_max)?;
    if k_min > k_max {
        return Err(CliError::usage(format!("empty range {k_min}..{k_max}")));
    }
    Ok(())
}
