//! `setfam`: bounds, constructions, searches, lemma suites and certificates
//! from the command line.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use setfam_sets::Error;

#[derive(Parser, Debug)]
#[command(
    name = "setfam",
    version,
    about = "Intersecting and cross-intersecting family bounds, checked by search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunFlags,
}

#[derive(Args, Debug, Clone)]
pub struct RunFlags {
    /// output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: u64,
    /// include wall-clock times (output is then no longer reproducible)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Part {
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Shifted,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Crossover,
    Stability,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a bound with its term-by-term expansion
    Bound {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, requires = "x2")]
        x1: Option<usize>,
        #[arg(long, requires = "x1")]
        x2: Option<usize>,
    },
    /// Emit a named construction
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// index of J_i or G_i
        #[arg(long)]
        i: Option<usize>,
        /// star centre
        #[arg(long)]
        x: Option<usize>,
        /// sunflower core size
        #[arg(long)]
        core: Option<usize>,
        #[arg(long, requires = "x2")]
        x1: Option<usize>,
        #[arg(long, requires = "x1")]
        x2: Option<usize>,
        /// member of a pair written in text form
        #[arg(long, value_enum, default_value_t = Part::F)]
        part: Part,
        #[arg(long = "as", value_enum, default_value_t = FamilyFormat::Text)]
        as_format: FamilyFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for the optimum of a theorem's objective
    Search {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long)]
        min_f: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        /// list the optimum-attaining classes up to isomorphism
        #[arg(long)]
        enumerate: bool,
    },
    /// Run the lemma suite on its default instances
    Lemmas {
        /// comma-separated lemma names
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// random draws for instances too large to enumerate
        #[arg(long, default_value_t = setfam_verifier::DEFAULT_SAMPLES)]
        samples: u64,
    },
    /// Check a certificate file
    Certify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Reproduce a comparison table
    Table {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        k_min: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Violation = 2,
    Incomplete = 3,
    Io = 4,
}

/// A failure with its exit status and a one-line reason.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub reason: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Param(_) | Error::Domain(_) => Status::Usage,
            Error::Resource(_) => Status::Incomplete,
            Error::Parse { .. } => Status::Io,
        };
        Failure {
            status,
            reason: e.to_string(),
        }
    }
}

impl Failure {
    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Failure {
            status: Status::Io,
            reason: format!("io error: {}: {e}", path.display()),
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let first = e
                .to_string()
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .to_string();
            eprintln!("setfam: usage error: {}", one_line(&first));
            return ExitCode::from(Status::Usage as u8);
        }
    };
    match commands::run(&cli) {
        Ok((out, status)) => {
            print!("{out}");
            ExitCode::from(status as u8)
        }
        Err(f) => {
            eprintln!("setfam: {}", one_line(&f.reason));
            ExitCode::from(f.status as u8)
        }
    }
}
