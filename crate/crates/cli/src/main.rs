use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use trace_toolkit_cli::{
    cmd_algebra, cmd_scan, cmd_semigroup, max_frobenius_from_env, parse_generators, AlgebraKind,
    CliError, Report, ScanKind, EXIT_ERROR,
};

/// Canonical traces and nearly Gorenstein checks for numerical semigroups,
/// squarefree Veronese and Segre algebras, and Hibi rings.
#[derive(Parser)]
#[command(name = "trace-toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, trace and residue of one semigroup.
    Semigroup {
        /// Generators, comma or space separated.
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        /// Add the structure matrix (three non-symmetric generators only).
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        json: bool,
    },
    /// Batch checks over families of semigroups.
    Scan {
        #[command(subcommand)]
        kind: ScanCommand,
        /// Worker threads (default: available parallelism).
        #[arg(long, global = true)]
        threads: Option<usize>,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Hibi rings and monomial algebras.
    Algebra {
        #[command(subcommand)]
        kind: AlgebraCommand,
        #[arg(long, global = true)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Shifted family ⟨j, j+a, j+b⟩ past the periodicity threshold.
    Shift {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// Number of periods of length b to check.
        #[arg(long, default_value_t = 5)]
        periods: i64,
    },
    /// Every semigroup of minimal multiplicity with Fr ≤ bound.
    Minmult(Bound),
    /// Arithmetic sequences ⟨a, a+d, …, a+(e−1)d⟩.
    Arithmetic {
        #[arg(long)]
        a_max: i64,
        /// Largest step d (default: a-max).
        #[arg(long)]
        d_max: Option<i64>,
    },
    /// Every semigroup with Fr ≤ bound.
    Enumerate(Bound),
}

#[derive(Args)]
struct Bound {
    #[arg(long)]
    frobenius_max: i64,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Hibi ring of the poset in a JSON file {"elements": [...], "covers": [[lo, hi], ...]}.
    Hibi { file: PathBuf },
    /// Squarefree Veronese algebra of degree d in n variables.
    Sqvero { n: usize, d: usize },
    /// Segre product of polynomial rings in r and s variables.
    Segre { r: usize, s: usize },
    /// Witness that the maximal ideal of the d-th Veronese lies in the trace of M_j.
    Veronese { n: usize, d: usize, j: usize },
}

fn run(cli: Cli) -> Result<(Report, bool), CliError> {
    match cli.command {
        Command::Semigroup {
            generators,
            matrix,
            json,
        } => {
            let gens = parse_generators(&generators)?;
            Ok((cmd_semigroup(&gens, matrix, max_frobenius_from_env()?)?, json))
        }
        Command::Scan {
            kind,
            threads,
            json,
        } => {
            let kind = match kind {
                ScanCommand::Shift { a, b, periods } => ScanKind::Shift { a, b, periods },
                ScanCommand::Minmult(b) => ScanKind::MinMult {
                    frobenius_max: b.frobenius_max,
                },
                ScanCommand::Arithmetic { a_max, d_max } => ScanKind::Arithmetic {
                    a_max,
                    d_max: d_max.unwrap_or(a_max),
                },
                ScanCommand::Enumerate(b) => ScanKind::Enumerate {
                    frobenius_max: b.frobenius_max,
                },
            };
            Ok((cmd_scan(&kind, threads)?, json))
        }
        Command::Algebra { kind, json } => {
            let kind = match kind {
                AlgebraCommand::Hibi { file } => AlgebraKind::Hibi { path: file },
                AlgebraCommand::Sqvero { n, d } => AlgebraKind::SqVero { n, d },
                AlgebraCommand::Segre { r, s } => AlgebraKind::Segre { r, s },
                AlgebraCommand::Veronese { n, d, j } => AlgebraKind::Veronese { n, d, j },
            };
            Ok((cmd_algebra(&kind)?, json))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((report, json)) => {
            if json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
