//! Command-line harness for monoscope: state files, family sampling,
//! bound verdicts, census tables and the closed-form family checks.
//!
//! Everything the `monoscope` binary does is reachable through [`run`], so
//! the commands can be driven in-process.

pub mod args;
pub mod commands;
pub mod experiment;
pub mod manifest;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use experiment::{evaluate_sample, SampleEvaluation};
pub use manifest::{ExperimentManifest, OutputFormat};
pub use output::{CensusRecord, ScatterRow, SCHEMA_VERSION};

pub const EXIT_OK: u8 = 0;
/// Bad arguments, unreadable or unparseable input, unwritable output.
pub const EXIT_USAGE: u8 = 1;
/// A computation rejected its input or failed to converge.
pub const EXIT_INVARIANT: u8 = 2;
/// The run finished but found a state with `δ > F(G)` beyond tolerance.
pub const EXIT_VIOLATION: u8 = 3;

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "MONOSCOPE_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] monoscope::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Core(monoscope::Error::Parse { .. }) => EXIT_USAGE,
            CliError::Core(monoscope::Error::InvalidConfig(_)) => EXIT_USAGE,
            CliError::Core(_) => EXIT_INVARIANT,
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        CliError::Io { path: path.as_ref().display().to_string(), source }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Worker count from [`THREADS_ENV`]; `None` means the hardware default.
pub fn threads_from_env() -> CliResult<Option<usize>> {
    parse_threads(std::env::var(THREADS_ENV).ok().as_deref())
}

pub fn parse_threads(value: Option<&str>) -> CliResult<Option<usize>> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV}={v:?} must be a positive integer"))),
        },
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing reports to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, threads: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| commands::dispatch(cli.command, &mut buffer));
    if let Err(e) = out.write_all(&buffer).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
