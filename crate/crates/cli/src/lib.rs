//! Library surface of the `isodistill` command-line front end, kept separate
//! from the binary so that runs are scriptable and testable in-process.

pub mod classify;
pub mod compare;
pub mod config;
pub mod error;
pub mod render;
pub mod scan;
pub mod sweep;
pub mod validate;

use config::{OutputFormat, SweepConfig};
use error::CliError;

/// Runs one subcommand and renders its output in the configured format.
pub fn run_command(command: Command, config: &SweepConfig) -> Result<String, CliError> {
    match command {
        Command::Sweep => {
            let rows = sweep::run_sweep(config)?;
            Ok(match config.output_format {
                OutputFormat::Csv => sweep::to_csv(config, &rows),
                OutputFormat::Json => sweep::to_json(&rows),
            })
        }
        Command::Classify => {
            let report = classify::run_classify(config)?;
            Ok(match config.output_format {
                OutputFormat::Csv => classify::to_csv(&report),
                OutputFormat::Json => classify::to_json(&report),
            })
        }
        Command::ConjectureScan => {
            let report = scan::run_scan(config)?;
            Ok(match config.output_format {
                OutputFormat::Csv => scan::to_csv(&report),
                OutputFormat::Json => scan::to_json(&report),
            })
        }
        Command::Validate => {
            let report = validate::run_validate(config)?;
            Ok(match config.output_format {
                OutputFormat::Csv => validate::to_csv(&report),
                OutputFormat::Json => validate::to_json(&report),
            })
        }
    }
}

/// The four subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Sweep,
    Classify,
    ConjectureScan,
    Validate,
}
