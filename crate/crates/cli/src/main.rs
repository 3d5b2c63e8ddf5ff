use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use gorenstein::census::{census_report, random_self_dual, CensusOptions};
use gorenstein::code::LinearCode;
use gorenstein::decomp::{build_block_graph, GorensteinStatus};
use gorenstein::field::Field;
use gorenstein::report::{self, ReportError};
use gorenstein::{corpus, text};

mod render;

/// Exit status for input that could not be read or parsed.
const EXIT_INPUT: u8 = 3;
/// Exit status for failures during the computation itself.
const EXIT_FAILURE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gorenstein",
    version,
    about = "Block structure and Schur squares of self-dual codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full analysis; exits 0 if Gorenstein, 1 if not, 2 if inapplicable.
    Analyze {
        /// Code file, or `corpus:NAME` for a bundled example.
        input: String,
        #[arg(long)]
        json: bool,
        /// Write the block graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Split a code into indecomposable blocks.
    Decompose {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Table of self-dual and indecomposable self-dual code counts.
    Census {
        #[arg(long)]
        q: u64,
        #[arg(long, value_name = "N")]
        max: usize,
        /// Also enumerate every length small enough to enumerate.
        #[arg(long)]
        verify_enumeration: bool,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all self-dual codes of length n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Count codes by number of blocks.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a diagonal D with G·D·Gᵀ = 0.
    Selfassoc {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a random self-dual code in the code file format.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_blocks: usize,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure {
            code: EXIT_FAILURE,
            error: e.into(),
        }
    }
}

fn input_error(e: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        error: e.into(),
    }
}

fn load(input: &str) -> Result<LinearCode, Failure> {
    let source = match input.strip_prefix("corpus:") {
        Some(name) => corpus::ALL
            .iter()
            .find(|(n, _)| n.trim_end_matches(".code") == name.trim_end_matches(".code"))
            .map(|(_, s)| s.to_string())
            .with_context(|| {
                let names: Vec<&str> = corpus::ALL.iter().map(|(n, _)| *n).collect();
                format!("unknown corpus entry {name:?}, expected one of {}", names.join(", "))
            })
            .map_err(input_error)?,
        None => std::fs::read_to_string(input)
            .with_context(|| format!("reading {input}"))
            .map_err(input_error)?,
    };
    let m = text::parse_matrix(&source)
        .with_context(|| format!("parsing {input}"))
        .map_err(input_error)?;
    LinearCode::new(m)
        .with_context(|| format!("{input} does not have full row rank"))
        .map_err(input_error)
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    emit(&s)
}

fn write_dot(code: &LinearCode, path: &Path) -> Result<(), Failure> {
    std::fs::write(path, build_block_graph(code).to_dot()).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { input, json, dot } => {
            let code = load(&input)?;
            let report = match report::analyze(&code) {
                Ok(r) => r,
                Err(e @ ReportError::SchurDimensionMismatch { .. }) => {
                    return Err(anyhow::Error::new(e)
                        .context("internal consistency check failed")
                        .into())
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(path) = dot {
                write_dot(&code, &path)?;
            }
            if json {
                print_json(&report)?;
            } else {
                for w in &report.warnings {
                    eprintln!("warning: {w}");
                }
                emit(&render::analysis(&report))?;
            }
            Ok(match report.verdict {
                GorensteinStatus::Gorenstein => 0,
                GorensteinStatus::NotGorenstein => 1,
                GorensteinStatus::Inapplicable => 2,
            })
        }
        Command::Decompose { input, json } => {
            let report = report::decomposition_report(&load(&input)?);
            if json {
                print_json(&report)?;
            } else {
                emit(&render::decomposition(&report))?;
            }
            Ok(0)
        }
        Command::Census {
            q,
            max,
            verify_enumeration,
            csv,
            json,
        } => {
            let options = CensusOptions {
                verify_enumeration,
                verify_partition: true,
            };
            let table = census_report(max, q, options)?;
            if json {
                print_json(&report::CensusReport::from(table))?;
            } else if csv {
                emit(&table.to_csv())?;
            } else {
                emit(&render::census(&table))?;
            }
            Ok(0)
        }
        Command::Enumerate { n, q, classify, json } => {
            let field = Field::with_order(q)?;
            let report = report::enumeration_report(n, &field, classify)?;
            if json {
                print_json(&report)?;
            } else {
                emit(&render::enumeration(&report))?;
            }
            Ok(0)
        }
        Command::Selfassoc { input, json } => {
            let report = report::self_association_report(&load(&input)?)?;
            if json {
                print_json(&report)?;
            } else {
                emit(&render::self_association(&report))?;
            }
            Ok(0)
        }
        Command::Sample { n, q, seed, max_blocks } => {
            let field = Field::with_order(q)?;
            let sampled = random_self_dual(n, &field, seed, max_blocks)?;
            let lengths: Vec<String> = sampled.block_lengths.iter().map(|l| l.to_string()).collect();
            emit(&format!(
                "# seed {seed}, block lengths {}\n{}",
                lengths.join(" "),
                text::write_matrix(sampled.code.generator())
            ))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
