//! Command-line companion for `wzcheck-core`: grid drivers, report records
//! and their JSON, CSV and text renderings.

pub mod cli;
pub mod output;
pub mod record;
pub mod runner;

/// Errors that end a run with exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// Exit status for usage, configuration and IO errors.
pub const EXIT_USAGE: i32 = 2;
