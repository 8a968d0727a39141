//! Command-line front end for the Boolean-valued model workbench.
//!
//! Three commands: `eval` prints the Boolean value of each scenario
//! formula, `ultrapower` builds the quotient and runs the transfer,
//! triviality, presentation, and limit checks, `demo-omega` runs the
//! symbolic countable-index demonstrations.  Scenarios are JSON files
//! (see the `ultra` scenario schema); reports come out as JSON or
//! aligned text.
//!
//! Exit codes: 0 every check passed, 1 a check failed but the run was
//! valid, 2 input error, 3 resource guard refused the scenario.

mod demo_omega;
mod eval;
mod report;
mod ultrapower;

use std::fmt;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ultra::{scenario_from_json, Scenario};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Guard(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Guard(msg) => write!(f, "resource guard: {msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<ultra::UltraError> for CliError {
    fn from(e: ultra::UltraError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<fol::FolError> for CliError {
    fn from(e: fol::FolError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<names::NamesError> for CliError {
    fn from(e: names::NamesError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Text => "text",
        })
    }
}

#[derive(Parser)]
#[command(
    name = "bvm",
    about = "Boolean-valued model workbench",
    version,
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boolean values of the scenario's formulas, with law warnings
    Eval(eval::EvalArgs),
    /// Quotient model with transfer, triviality, presentation, and limit checks
    Ultrapower(ultrapower::UltrapowerArgs),
    /// Symbolic countable-index demonstrations
    DemoOmega(demo_omega::DemoArgs),
}

/// Caps a scenario must satisfy before any construction starts.
pub struct Limits {
    pub max_atoms: usize,
    pub max_depth: usize,
}

/// Reads and validates a scenario file against the guards.  The returned
/// rank is the command-line override when given, the scenario's otherwise.
pub fn load_scenario(
    path: &Path,
    limits: &Limits,
    rank_override: Option<usize>,
) -> CliResult<(Scenario, usize)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let scenario = scenario_from_json(&text)?;
    let atoms = scenario.algebra.atom_count();
    if atoms > limits.max_atoms {
        return Err(CliError::Guard(format!(
            "algebra has {atoms} atoms, --max-atoms allows {}",
            limits.max_atoms
        )));
    }
    for (phi, text) in scenario.formulas.iter().zip(&scenario.formula_texts) {
        let d = phi.depth();
        if d > limits.max_depth {
            return Err(CliError::Guard(format!(
                "formula `{text}` has depth {d}, --depth allows {}",
                limits.max_depth
            )));
        }
    }
    let rank = rank_override.unwrap_or(scenario.pool_rank);
    if rank > names::DEFAULT_RANK_CAP {
        return Err(CliError::Guard(format!(
            "pool rank {rank} exceeds the fragment cap {}",
            names::DEFAULT_RANK_CAP
        )));
    }
    Ok((scenario, rank))
}

/// Rejects check names the command does not know, so scenario references
/// resolve before anything runs.
pub fn validate_checks(requested: &[String], known: &[&str]) -> CliResult<()> {
    for name in requested {
        if !known.iter().any(|k| k == name) {
            return Err(CliError::Input(format!(
                "unknown check `{name}`; this command knows {}",
                known.join(", ")
            )));
        }
    }
    Ok(())
}

pub fn check_requested(requested: &[String], name: &str) -> bool {
    requested.is_empty() || requested.iter().any(|c| c == name)
}

fn emit<R: Serialize>(r: &R, text: String, format: Format) {
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(r).expect("report structs serialize");
            println!("{json}");
        }
        Format::Text => print!("{text}"),
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Eval(args) => {
            let (report, passed) = eval::run(&args)?;
            emit(&report, report.render_text(), args.format);
            Ok(passed)
        }
        Command::Ultrapower(args) => {
            let (report, passed) = ultrapower::run(&args)?;
            emit(&report, report.render_text(), args.format);
            Ok(passed)
        }
        Command::DemoOmega(args) => {
            let (report, passed) = demo_omega::run(&args);
            emit(&report, report.render_text(), args.format);
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
