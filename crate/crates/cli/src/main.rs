use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trace_divisors_cli::commands::{
    cmd_class, cmd_m0n, cmd_slope, cmd_table, cmd_verify, load_externals, M0nQuery, TABLE_HELP,
};
use trace_divisors_cli::render::OutputFormat;
use trace_divisors_cli::{CliError, CliResult};

/// Exact divisor classes of trace curves over the Hurwitz space of genus-2k
/// curves, their push-forwards to M_g, and the resulting slopes.
#[derive(Parser)]
#[command(name = "trace-divisors", version)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one class.
    ///
    /// NAME is one of delta-tau, omega-tau-sq, delta-s, s-omega-sq,
    /// phi-lambda, phihat-lambda, phi-delta:<j>, phihat-delta:<j>, q-T2,
    /// q-T3j:<j>, p-phi-lambda, p-phihat-lambda, p-q-kappa, eh-divisor,
    /// prym-hodge, prym-boundary.
    Class {
        name: String,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Divide classes on M_g by (6k)!.
        #[arg(long)]
        normalized: bool,
        /// JSON table of the external coefficients c_j, b_j to substitute.
        #[arg(long, value_name = "PATH")]
        externals: Option<PathBuf>,
    },
    /// Run identity checks for every k in a range.
    ///
    /// Checks are named individually or by the groups `all` and
    /// `closed-forms`. Checks that need external coefficients are skipped
    /// unless --externals is given.
    Verify {
        k_min_pos: Option<u32>,
        k_max_pos: Option<u32>,
        checks_pos: Option<String>,
        #[arg(long)]
        k_min: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        /// Comma-separated check names.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, value_name = "PATH")]
        externals: Option<PathBuf>,
    },
    /// Print a slope as "p/q ≈ decimal validity=...".
    Slope {
        #[arg(long)]
        k: u32,
        /// Slope s' of the ample class on the trace-curve moduli space.
        #[arg(long, allow_hyphen_values = true)]
        s_prime: Option<String>,
        /// trace, reduced or kappa.
        #[arg(long, default_value = "trace")]
        variant: String,
        #[arg(long, value_name = "PATH")]
        externals: Option<PathBuf>,
    },
    /// Boundary divisors of the moduli space of b-pointed rational curves.
    M0n {
        b: u32,
        #[command(subcommand)]
        query: M0nCommand,
    },
    /// Print one row per k.
    #[command(after_help = TABLE_HELP)]
    Table {
        #[arg(long)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        /// genus, kappa-slope, slope-bound or coefficients:<name>.
        #[arg(long)]
        quantity: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum M0nCommand {
    /// Number of boundary divisors.
    Count,
    /// Normalized label of a set such as 1,2.
    Normalize { set: String },
    /// Whether two boundary divisors meet.
    Intersect { first: String, second: String },
}

fn pick(pos: Option<u32>, flag: Option<u32>, what: &str) -> CliResult<Option<u32>> {
    match (pos, flag) {
        (Some(a), Some(b)) if a != b => {
            Err(CliError::usage(format!("conflicting values for {what}")))
        }
        (a, b) => Ok(a.or(b)),
    }
}

/// Output text plus whether every verification passed.
fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let externals = |p: &Option<PathBuf>| p.as_deref().map(load_externals).transpose();
    match &cli.command {
        Command::Class {
            name,
            k,
            format,
            normalized,
            externals: ext,
        } => {
            let ext = externals(ext)?;
            Ok((
                cmd_class(name, *k, *format, *normalized, ext.as_ref())?,
                true,
            ))
        }
        Command::Verify {
            k_min_pos,
            k_max_pos,
            checks_pos,
            k_min,
            k_max,
            checks,
            externals: ext,
        } => {
            let k_min = pick(*k_min_pos, *k_min, "k-min")?.unwrap_or(1);
            let k_max = pick(*k_max_pos, *k_max, "k-max")?.unwrap_or(k_min);
            let list = match (checks_pos, checks) {
                (Some(a), Some(b)) if a != b => {
                    return Err(CliError::usage("conflicting check lists"))
                }
                (a, b) => a
                    .as_ref()
                    .or(b.as_ref())
                    .cloned()
                    .unwrap_or_else(|| "all".into()),
            };
            let names: Vec<String> = list.split(',').map(str::to_string).collect();
            let ext = externals(ext)?;
            let report = cmd_verify(k_min, k_max, &names, ext.as_ref())?;
            Ok((report.text, report.passed))
        }
        Command::Slope {
            k,
            s_prime,
            variant,
            externals: ext,
        } => {
            let ext = externals(ext)?;
            Ok((
                cmd_slope(*k, s_prime.as_deref(), variant, ext.as_ref())?,
                true,
            ))
        }
        Command::M0n { b, query } => {
            let q = match query {
                M0nCommand::Count => M0nQuery::Count,
                M0nCommand::Normalize { set } => M0nQuery::Normalize(set),
                M0nCommand::Intersect { first, second } => M0nQuery::Intersect(first, second),
            };
            Ok((cmd_m0n(*b, q)?, true))
        }
        Command::Table {
            k_min,
            k_max,
            quantity,
            format,
        } => Ok((cmd_table(*k_min, *k_max, quantity, *format)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, passed) = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
