//! `semimatroid`: check, evaluate and verify semimatroids from the shell.
//!
//! Exit status is 0 when everything checked out, 1 when a check failed or
//! an input could not be processed, and 2 on a usage error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "semimatroid", version, about = "Exact semimatroid invariants and identity checks")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Linear order on the ground set, as comma-separated labels.
    #[arg(long, global = true, value_delimiter = ',')]
    order: Option<Vec<String>>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for multi-file or multi-identity runs.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    /// One JSON document per input.
    Machine,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteArg {
    Sum,
    Dc,
    Activities,
    ViaZ,
    /// Every route, failing unless all agree.
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the axioms.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print one invariant as a canonical polynomial.
    Invariant {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        poly: semimatroid::Invariant,
        #[arg(long, value_enum, default_value_t = RouteArg::Sum)]
        route: RouteArg,
    },
    /// Internal/external activity of every basis and the interval decomposition.
    Activities {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run the identity checks.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "all")]
        identity: Vec<semimatroid::IdentityId>,
        /// Every identity (the default).
        #[arg(long)]
        all: bool,
    },
    /// Build a seeded random arrangement.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        bound: u32,
        /// Print the explicit document instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// Convert an arrangement document.
    FromArrangement {
        file: PathBuf,
        /// Print the explicit document instead of a summary.
        #[arg(long)]
        emit: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    if g.jobs > 1 {
        // A second initialisation can only fail if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(g.jobs).build_global();
    }
    let outcome = match cli.command {
        Command::Check { files } => commands::check(&g, &files),
        Command::Invariant { files, poly, route } => commands::invariant(&g, &files, poly, route),
        Command::Activities { files } => commands::activities(&g, &files),
        Command::Verify { files, identity, .. } => commands::verify(&g, &files, &identity),
        Command::Random { seed, n, d, bound, emit } => {
            commands::random(&g, semimatroid::RandomSpec { seed, n, d, bound }, emit)
        }
        Command::FromArrangement { file, emit } => commands::from_arrangement(&g, &file, emit),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
