//! `epstein-lab`: evaluate Epstein zeta functions, scan and store critical
//! zeros, tabulate gap statistics and run the verification suites.
//!
//! Exit codes: 0 success, 1 internal error or failed check, 2 bad input.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "epstein-lab", version, about = "Epstein zeta functions of binary quadratic forms")]
struct Cli {
    /// `key=value` file with defaults for any flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Arithmetic width.
    #[arg(long, global = true, value_enum)]
    precision: Option<Precision>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Precision {
    F32,
    F64,
}

impl std::str::FromStr for Precision {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate ζ_Q(s).
    Eval(EvalArgs),
    /// Scan [t0, t1] for zeros of W and write or extend a zero table.
    Zeros(ZerosArgs),
    /// Gap counts R(V) from a stored zero table.
    Gaps(GapsArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub form: Option<String>,
    /// Complex argument such as `3`, `0.5+14.1i` or `-1-2i`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
}

#[derive(Args, Debug)]
pub struct ZerosArgs {
    #[arg(long)]
    pub form: Option<String>,
    /// `t0:t1`.
    #[arg(long)]
    pub range: Option<String>,
    /// Grid step base (step is `step / max(1, log(k t))`).
    #[arg(long)]
    pub step: Option<f64>,
    /// Zero table path (defaults to the cache directory).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Extend an existing table instead of replacing it.
    #[arg(long)]
    pub resume: bool,
}

#[derive(Args, Debug)]
pub struct GapsArgs {
    #[arg(long)]
    pub form: Option<String>,
    /// Upper end of the range [0, T].
    #[arg(long = "T")]
    pub t: Option<f64>,
    /// Gap lengths `v1,v2,...`.
    #[arg(long = "V")]
    pub v: Option<String>,
    /// Zero table path (defaults to the cache directory).
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of the suite names, e.g. `functional-equation`.
    pub suite: String,
    #[arg(long)]
    pub form: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_user_error() { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> epstein_core::Result<u8> {
    let file = match &cli.config {
        Some(p) => config::FileConfig::load(p)?,
        None => config::FileConfig::default(),
    };
    let workers: Option<usize> = file.pick(cli.workers, "workers")?;
    if let Some(n) = workers {
        if n == 0 {
            return Err(epstein_core::Error::InvalidArgument("--workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| epstein_core::Error::Resource(e.to_string()))?;
    }
    let precision = file.pick(cli.precision, "precision")?.unwrap_or(Precision::F64);
    match cli.command {
        Command::Eval(a) => commands::eval(a, precision, &file),
        Command::Zeros(a) => commands::zeros(a, precision, &file),
        Command::Gaps(a) => commands::gaps(a, &file),
        Command::Verify(a) => commands::verify(a, &file),
    }
}
