//! Library half of the `dsr` binary: file formats, command implementations
//! and the exit-code contract.

pub mod commands;
pub mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Recognition(String),
    #[error(transparent)]
    Core(#[from] dsr_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(dsr_core::Error::Resource(_)) => 3,
            _ => 2,
        }
    }
}

/// Verdict of a command that answers yes or no.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "dsr",
    version,
    about = "Dominating set reconfiguration toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance and optionally write a witness sequence.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Class::Auto)]
        class: Class,
        /// Maximum neighborhood ordering to use for the dually chordal solver.
        #[arg(long, conflicts_with = "intervals")]
        mno: Option<PathBuf>,
        /// Interval model of the graph.
        #[arg(long)]
        intervals: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        emit_sequence: Option<PathBuf>,
        /// Print the decision path to stderr.
        #[arg(long)]
        explain: bool,
        /// State budget for the exhaustive search.
        #[arg(long, value_name = "N")]
        max_states: Option<usize>,
    },
    /// Check a move sequence against an instance.
    Verify {
        instance: PathBuf,
        sequence: PathBuf,
    },
    /// Exhaustive search: reachability, distance, or reconfiguration graph stats.
    Oracle {
        instance: PathBuf,
        #[arg(long, conflicts_with = "stats")]
        shortest: bool,
        /// Summarize the reconfiguration graph for k tokens.
        #[arg(long, value_name = "K")]
        stats: Option<usize>,
        #[arg(long, value_name = "N")]
        max_states: Option<usize>,
    },
    /// Apply a hardness construction to a graph file.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        graph: PathBuf,
        /// Bandwidth labeling of the input (incidence only).
        #[arg(long, requires = "bandwidth")]
        labels: Option<PathBuf>,
        #[arg(long, requires = "labels")]
        bandwidth: Option<usize>,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Auto,
    DuallyChordal,
    Cograph,
    Join,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    Split,
    Bipartite,
    Incidence,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// The frozen-configuration family on 3L+2 vertices.
    Gell {
        ell: usize,
    },
    /// Star with n leaves.
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    RandomInterval {
        n: usize,
        seed: u64,
        /// Also write the interval model here.
        #[arg(long, value_name = "PATH")]
        intervals_out: Option<PathBuf>,
    },
    RandomCograph {
        n: usize,
        seed: u64,
    },
}

/// Runs a parsed command line, printing results to stdout and diagnostics to
/// stderr.
pub fn run(cli: Cli) -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let result = commands::dispatch(cli.command, &mut stdout.lock(), &mut stderr.lock());
    match result {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        // A closed pipe on stdout (`dsr gen ... | head`) is not a failure.
        Err(CliError::Io { path, source })
            if path.as_os_str() == "<stdout>"
                && source.kind() == std::io::ErrorKind::BrokenPipe =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
