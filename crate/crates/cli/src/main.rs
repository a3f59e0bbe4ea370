//! `sptcrank`: verification runs, congruence scans, coefficient tables,
//! enumeration cross-checks and ad-hoc q-series evaluation.
//!
//! Exit status is 0 when everything checked passes, 1 on a verification
//! failure and 2 on a usage or parse error.

mod commands;
mod expr;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use sptcrank::combinatorics::SptKind;
use sptcrank::spt::SptFamily;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sptcrank::Error),
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Parser)]
#[command(name = "sptcrank", version, about = "Exact q-series checks for spt-crank generating functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify registered identities coefficient by coefficient.
    Verify(VerifyArgs),
    /// Check spt_X(tn + r) ≡ 0 (mod t) and the vanishing at a t-th root of unity.
    Congruence(CongruenceArgs),
    /// Print spt_X(n), optionally with the residue-class counts M_X(k, t, n).
    Table(TableArgs),
    /// Compare series coefficients with brute-force enumeration.
    OracleCheck(OracleArgs),
    /// Scan M_X(m, n) for negative values.
    ScanNonneg(ScanArgs),
    /// Expand an expression as a power series in q.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Column {
    Spt,
    Mresidue,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["id", "filter", "all"])))]
struct VerifyArgs {
    /// A single identity id.
    #[arg(long)]
    id: Option<String>,
    /// An id prefix or tag.
    #[arg(long)]
    filter: Option<String>,
    /// Every registered identity.
    #[arg(long)]
    all: bool,
    /// Truncation order; each identity has its own default.
    #[arg(long, env = "SPTCRANK_ORDER")]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct CongruenceArgs {
    #[arg(long, value_parser = parse_family)]
    family: SptFamily,
    #[arg(long = "mod", value_parser = clap::value_parser!(u8).range(2..))]
    modulus: u8,
    #[arg(long)]
    residue: u8,
    #[arg(long = "max")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_family)]
    family: SptFamily,
    #[arg(long = "max")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "spt")]
    what: Column,
    /// Modulus for the residue-class columns.
    #[arg(long = "mod", required_if_eq("what", "mresidue"), value_parser = clap::value_parser!(u32).range(1..))]
    modulus: Option<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: SptKind,
    #[arg(long = "max")]
    n_max: u32,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_parser = parse_scan_family)]
    family: SptFamily,
    #[arg(long = "max")]
    n_max: usize,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    expr: String,
    #[arg(long, env = "SPTCRANK_ORDER", default_value_t = 20)]
    order: usize,
}

fn parse_family(s: &str) -> Result<SptFamily, String> {
    s.parse().map_err(|e: sptcrank::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<SptKind, String> {
    s.parse().map_err(|e: sptcrank::Error| e.to_string())
}

fn parse_scan_family(s: &str) -> Result<SptFamily, String> {
    match parse_family(s)? {
        f @ (SptFamily::C1 | SptFamily::C5 | SptFamily::E4) => Ok(f),
        f => Err(format!("{f} has no nonnegativity statement; use C1, C5 or E4")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Verify(a) => commands::verify(&mut out, a),
        Command::Congruence(a) => commands::congruence(&mut out, a),
        Command::Table(a) => commands::table(&mut out, a),
        Command::OracleCheck(a) => commands::oracle_check(&mut out, a),
        Command::ScanNonneg(a) => commands::scan_nonneg(&mut out, a),
        Command::Eval(a) => commands::eval(&mut out, a),
    };
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
