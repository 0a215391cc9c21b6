use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use isodistill_cli::compare::tolerance_compare;
use isodistill_cli::config::{OutputFormat, Overrides, SweepConfig};
use isodistill_cli::error::CliError;
use isodistill_cli::{run_command, Command};

/// Lorentz-boosted two-spin states: distillability thresholds, frame
/// classification, and conjecture scans.
#[derive(Parser)]
#[command(name = "isodistill", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Rapidity sweep: n_z, the threshold N_z, and per-F Werner verdicts.
    Sweep(CommonArgs),
    /// WIE/WID/SIE/SID classification of Werner states over the frame grid.
    Classify(CommonArgs),
    /// Negativity-variation scan over a seeded random ensemble.
    ConjectureScan(CommonArgs),
    /// Echo derived quantities and physics warnings; exit 0 on warnings.
    Validate(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON config document: a path, or `-` for standard input.
    #[arg(long, value_name = "PATH")]
    config: Option<String>,

    /// Momentum width over twice the mass (w/2m).
    #[arg(long, value_name = "X")]
    w_over_2m: Option<f64>,

    /// Smallest rapidity of the grid.
    #[arg(long, value_name = "ALPHA")]
    alpha_min: Option<f64>,

    /// Largest rapidity of the grid.
    #[arg(long, value_name = "ALPHA")]
    alpha_max: Option<f64>,

    /// Number of grid points, endpoints included.
    #[arg(long, value_name = "N")]
    alpha_steps: Option<usize>,

    /// Werner fidelity; repeat the flag for several values.
    #[arg(long = "F", value_name = "F")]
    f_values: Vec<f64>,

    /// Seed for the random-ensemble commands.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,

    /// Output encoding.
    #[arg(long, value_name = "csv|json")]
    format: Option<String>,

    /// Compare the command's output against a reference file at 1e-12
    /// instead of printing it; exits 1 on mismatch.
    #[arg(long, value_name = "PATH")]
    tolerance_compare: Option<String>,
}

fn read_config_document(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Config(format!("reading config from stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("reading config {path}: {e}")))
    }
}

fn parse_format(text: &str) -> Result<OutputFormat, CliError> {
    match text {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::Config(format!(
            "flag --format: expected csv or json, got {other}"
        ))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (command, args) = match cli.command {
        CliCommand::Sweep(args) => (Command::Sweep, args),
        CliCommand::Classify(args) => (Command::Classify, args),
        CliCommand::ConjectureScan(args) => (Command::ConjectureScan, args),
        CliCommand::Validate(args) => (Command::Validate, args),
    };

    let document = args
        .config
        .as_deref()
        .map(read_config_document)
        .transpose()?;
    let overrides = Overrides {
        w_over_2m: args.w_over_2m,
        alpha_min: args.alpha_min,
        alpha_max: args.alpha_max,
        alpha_steps: args.alpha_steps,
        f_values: if args.f_values.is_empty() {
            None
        } else {
            Some(args.f_values.clone())
        },
        seed: args.seed,
        output_format: args.format.as_deref().map(parse_format).transpose()?,
    };
    let config = SweepConfig::resolve(document.as_deref(), &overrides)?;

    if config.width_warning() {
        eprintln!(
            "warning: w/2m = {} puts the packet in the w >= m regime; run `isodistill \
             validate` for details",
            config.w_over_2m
        );
    }

    let output = run_command(command, &config)?;

    match args.tolerance_compare {
        None => {
            print!("{output}");
            Ok(())
        }
        Some(path) => {
            let reference = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Config(format!("reading reference {path}: {e}")))?;
            tolerance_compare(&output, &reference)?;
            eprintln!("tolerance-compare: output matches {path} within 1e-12");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
