//! Command-line front end.
//!
//! Exit codes: 0 accepted, 1 mathematical rejection, 2 input error.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::linalg::{parse_rat, Rat};
use document::{parse_document, Document, InputError};

pub use document::{parse_linear, serialize_spec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("invalid input: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "darboux",
    version,
    about = "Exact checks and Darboux normal forms for linear geometric structures"
)]
pub struct Args {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "human")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a linear structure against every applicable definition.
    Classify { file: PathBuf },
    /// Compute a certified Darboux basis.
    Normalform {
        file: PathBuf,
        /// Also normal-form a random change of basis of the input.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Closedness, rank profiles, kernels, Frobenius and pullbacks on a chart.
    ChartCheck {
        file: PathBuf,
        /// Sample point as comma-separated rationals; replaces the file's points.
        #[arg(long = "points", value_name = "POINT")]
        points: Vec<String>,
    },
    /// Parallel forms, torsion and curvature of a connection.
    ConnectionCheck { file: PathBuf },
    /// Run the embedded examples.
    Corpus {
        /// Only examples whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
}

/// Result of a command: exit code and the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| {
        InputError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }
        .into()
    })
}

fn parse_point(text: &str) -> Result<Vec<Rat>, CliError> {
    text.split(',')
        .map(|s| {
            parse_rat(s.trim()).map_err(|e| CliError::Invalid(format!("--points {text:?}: {e}")))
        })
        .collect()
}

fn wrong_kind(expected: &str) -> CliError {
    CliError::Invalid(format!("this command needs a {expected} document"))
}

fn dispatch(command: &Command) -> Result<(&'static str, commands::Outcome), CliError> {
    Ok(match command {
        Command::Classify { file } => {
            let spec = parse_linear(&read(file)?)?;
            ("classify", commands::run_classify(&spec)?)
        }
        Command::Normalform { file, seed } => {
            let spec = parse_linear(&read(file)?)?;
            ("normalform", commands::run_normal_form(&spec, *seed)?)
        }
        Command::ChartCheck { file, points } => {
            let Document::Chart(doc) = parse_document(&read(file)?)? else {
                return Err(wrong_kind("chart"));
            };
            let bundle = doc.resolve()?;
            let override_points = if points.is_empty() {
                None
            } else {
                Some(
                    points
                        .iter()
                        .map(|p| parse_point(p))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            };
            (
                "chart-check",
                commands::run_chart_check(&bundle, override_points.as_deref())?,
            )
        }
        Command::ConnectionCheck { file } => {
            let Document::Connection(doc) = parse_document(&read(file)?)? else {
                return Err(wrong_kind("connection"));
            };
            (
                "connection-check",
                commands::run_connection_check(&doc.resolve()?)?,
            )
        }
        Command::Corpus { filter } => {
            let results = corpus::run_corpus(filter.as_deref());
            let body = corpus::corpus_report(&results);
            let accepted = body["all_passed"].as_bool().unwrap_or(false);
            ("corpus", commands::Outcome { body, accepted })
        }
    })
}

pub fn execute(args: &Args) -> Output {
    match dispatch(&args.command) {
        Ok((name, outcome)) => {
            let report = report::envelope(name, outcome.body);
            let stdout = match args.format {
                Format::Machine => report::machine(&report),
                Format::Human => report::human(&report),
            };
            Output {
                code: if outcome.accepted { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses arguments and runs. Argument errors exit with 2, help with 0.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Args::try_parse_from(argv) {
        Ok(args) => execute(&args),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
