//! `hardcore`: batch verification of the independent-set and homomorphism
//! bounds for regular graphs.
//!
//! Exit status is 0 on success, 2 when a proved bound is violated (which
//! means the implementation is wrong) and 1 on usage or input errors.

mod commands;
mod expr;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] hardcore::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hardcore",
    version,
    about = "Exact checks of hard-core model bounds on small graphs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Graph input: a constructor such as `K(3,3)`, `C(5)`, `Kn(4)`, `P(3)`,
/// `U(2,K(2,2))` or `DC(Kn(3))`; a file of graph6 lines or edge-list JSON;
/// or `-` for stdin.
#[derive(Debug, Args)]
pub struct GraphInput {
    pub input: String,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    /// `indset:λ`, a constructor expression, or a target JSON file.
    #[arg(long)]
    pub target: Option<String>,
    /// Comma-separated target vertices carrying a loop.
    #[arg(long)]
    pub loops: Option<String>,
    /// Comma-separated target vertex activities.
    #[arg(long)]
    pub activities: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Independence polynomial and independent-set count.
    Poly {
        #[command(flatten)]
        graph: GraphInput,
        /// Also evaluate at this activity.
        #[arg(long)]
        lambda: Option<String>,
        /// Use the plain subset enumeration instead of branching.
        #[arg(long)]
        brute_force: bool,
    },
    /// Two-variable profile of a bipartite graph.
    Profile {
        #[command(flatten)]
        graph: GraphInput,
        /// Left side as comma-separated vertices; defaults to the canonical
        /// bipartition.
        #[arg(long)]
        left: Option<String>,
    },
    /// Checks the pair-family involution and the squared polynomial identity.
    Lemma {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Bipartite double cover `G x K2`.
    DoubleCover {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Homomorphism weight-class distribution and partition function.
    Hom {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// One bound on every input graph.
    Check {
        /// THM1, COR1, EQ3 .. EQ8 (full ids such as EQ3_EDGE also accepted).
        #[arg(long)]
        bound: String,
        #[command(flatten)]
        graph: GraphInput,
        /// Comma-separated activities; defaults to 1.
        #[arg(long)]
        lambda: Option<String>,
        /// Comma-separated left activities for EQ4; defaults to the λ list.
        #[arg(long)]
        mu: Option<String>,
        /// Fixed left side for EQ4 instead of every orientation.
        #[arg(long)]
        left: Option<String>,
        /// EQ6 on the two-variable profile instead of the polynomial.
        #[arg(long)]
        bivariate: bool,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Runs bounds over enumerated regular graphs or an input stream.
    Scan {
        /// Vertex count `N` or inclusive range `LO..HI`.
        #[arg(long, requires = "d")]
        n: Option<String>,
        /// Degree of the enumerated graphs.
        #[arg(long, requires = "n")]
        d: Option<usize>,
        /// Graphs to scan instead of enumerating.
        #[arg(conflicts_with_all = ["n", "d"], required_unless_present = "n")]
        input: Option<String>,
        /// Comma-separated activity grid.
        #[arg(long)]
        lambda: Option<String>,
        /// Comma-separated bounds; defaults to all.
        #[arg(long)]
        bounds: Option<String>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Keep every labelled graph instead of one per isomorphism class.
        #[arg(long)]
        no_dedup: bool,
    },
    /// Recomputes every quoted number and compares.
    PaperNumbers,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(&cli) {
        Ok(commands::Status::Clean) => ExitCode::SUCCESS,
        Ok(commands::Status::ProvedViolation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
