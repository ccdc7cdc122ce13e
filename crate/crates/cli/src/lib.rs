//! The `polyclique` command-line tool.

pub mod commands;
pub mod documents;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit code for unreadable, malformed or invalid input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for a failed verification or a method mismatch.
pub const EXIT_FAILURE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl From<polyclique::Error> for CliError {
    fn from(e: polyclique::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    SupportingLine,
    Oracle,
    Both,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::SupportingLine => "supporting-line",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "polyclique", version, about = "Maximal cliques of direction-constrained polygon scenes")]
pub struct Cli {
    /// Suppress diagnostics on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a scene and its intended graph, e.g. `generate ladder k=3 m=2`.
    Generate {
        /// multipartite, ladder, regular-odd, n3, sun, k33, random or random-segments
        family: String,
        /// Parameters as key=value.
        params: Vec<String>,
        /// Scene file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Intended graph file; defaults to `<out>.graph.json` next to the scene.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Widen segment scenes into parallelograms.
        #[arg(long)]
        inflate: bool,
    },
    /// Enumerate the maximal cliques of a scene.
    Cliques {
        scene: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::SupportingLine)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check directions, pairwise separation and the clique bound.
    Verify { scene: PathBuf },
    /// Draw a scene as SVG.
    Render {
        scene: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated item indices to shade.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<usize>,
    },
    /// Print the clique-count exponents for k directions in dimension d.
    Bound { k: u64, d: u64 },
    /// Time enumeration over a parameter grid, e.g. `bench multipartite n=6,9,12 k=3`.
    Bench {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let quiet = cli.quiet;
    match commands::dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            if !quiet {
                eprintln!("error: {e}");
            }
            e.code()
        }
    }
}
