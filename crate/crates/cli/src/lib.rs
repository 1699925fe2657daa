//! Command-line orchestration of the girthforge pipeline.
//!
//! Every command is a library function writing its human-readable summary
//! to a caller-supplied sink, so tests drive the same code paths as the
//! binary.

mod color;
mod config;
mod constants;
mod generate;
mod mc;
mod realize;
mod verify;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use girthforge::format::ParseError;

pub use color::ColorArgs;
pub use config::GenerateConfig;
pub use constants::ConstantsArgs;
pub use generate::{generate_artifacts, GenerateArgs, Generated};
pub use mc::{McArgs, McKind};
pub use realize::{realize_artifacts, RealizeArgs};
pub use verify::{verify_path, Check, VerifyArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("configuration: {0}")]
    Config(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    /// 2 for failed certificates, 3 for unusable input or configuration,
    /// 4 for exhausted resource budgets.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 2,
            CliError::Parse { .. } | CliError::Config(_) | CliError::Io { .. } => 3,
            CliError::Budget(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "girthforge", version, about = "High-girth cover graphs, greedy poset coloring and grounded curve realizations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a layered random graph, repair it and certify the result.
    Generate(GenerateArgs),
    /// Greedily color a uniquely generated poset and check the log bound.
    Color(ColorArgs),
    /// Realize a height-2 poset as grounded curves.
    Realize(RealizeArgs),
    /// Seeded Monte Carlo checks against exact expectations.
    Mc(McArgs),
    /// Re-certify an artifact file or directory from scratch.
    Verify(VerifyArgs),
    /// Check the constant chain in exact rational arithmetic.
    Constants(ConstantsArgs),
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(a) => generate::cmd_generate(&a, out),
        Command::Color(a) => color::cmd_color(&a, out),
        Command::Realize(a) => realize::cmd_realize(&a, out),
        Command::Mc(a) => mc::cmd_mc(&a, out),
        Command::Verify(a) => verify::cmd_verify(&a, out),
        Command::Constants(a) => constants::cmd_constants(&a, out),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code. Errors are reported on `err`.
pub fn run_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    match run(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn create_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn parse_err(path: &Path) -> impl FnOnce(ParseError) -> CliError + '_ {
    move |source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    }
}

pub(crate) fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}
