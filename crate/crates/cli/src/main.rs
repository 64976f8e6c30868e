mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Format;

/// Discrete Morse theory on simplicial complexes.
#[derive(Parser)]
#[command(name = "tightmorse", version, about)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Z2 Betti numbers of a facet file.
    Betti {
        file: std::path::PathBuf,
        /// Report reduced Betti numbers.
        #[arg(long)]
        reduced: bool,
    },
    /// Discrete Morse matchings.
    #[command(subcommand)]
    Morse(MorseCommand),
    /// Tightness of geometric realizations.
    #[command(subcommand)]
    Tight(TightCommand),
    /// Collapsibility and non-evasiveness.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Generate complexes.
    #[command(subcommand)]
    Build(BuildCommand),
}

#[derive(Subcommand)]
pub enum MorseCommand {
    /// Check that a matching file is an acyclic matching on a complex.
    Validate { complex: std::path::PathBuf, matching: std::path::PathBuf },
    /// Critical face counts of a matching file.
    Vector { complex: std::path::PathBuf, matching: std::path::PathBuf },
    /// Perfect matching from a height sweep of a tight realization.
    Sweep {
        geom: std::path::PathBuf,
        /// Direction, comma separated; rationals like 1/3 are exact.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        pi: Vec<String>,
        #[arg(long)]
        assume_tight: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Matching from random collapses.
    Random {
        complex: std::path::PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand)]
pub enum TightCommand {
    /// Tightness in one direction, or over random directions with --samples.
    Check {
        geom: std::path::PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pi: Option<Vec<String>>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
pub enum CheckCommand {
    Collapsible {
        file: std::path::PathBuf,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: StrategyArg,
        /// Restarts for greedy, expanded states for backtracking.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the collapse sequence as a matching file.
        #[command(flatten)]
        out: OutArg,
    },
    Nonevasive {
        file: std::path::PathBuf,
        #[arg(long, default_value_t = tightmorse::algorithms::nonevasive::DEFAULT_BUDGET)]
        budget: usize,
        /// Write the certificate as JSON.
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyArg {
    Greedy,
    Backtracking,
}

#[derive(Subcommand)]
pub enum BuildCommand {
    /// Box of unit cubes, six tetrahedra each.
    Grid {
        #[arg(long, value_delimiter = ',', num_args = 3, required = true)]
        n: Vec<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Grid ball with a tube drilled along a lattice path. Without --path the
    /// bundled trefoil path and its box are used.
    Furch {
        #[arg(long, value_delimiter = ',', num_args = 3)]
        n: Option<Vec<usize>>,
        #[arg(long)]
        path: Option<std::path::PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Close a 3-ball into a 3-sphere by coning off its boundary.
    ConeSphere {
        file: std::path::PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Thicken the wedge of two 3-balls into a 3-ball.
    Wedge {
        first: std::path::PathBuf,
        second: std::path::PathBuf,
        /// Boundary triangle a,b,x of the first ball.
        #[arg(long, value_delimiter = ',', num_args = 3, required = true)]
        t1: Vec<u32>,
        /// Boundary triangle a,b,x of the second ball, in its own labels.
        #[arg(long, value_delimiter = ',', num_args = 3, required = true)]
        t2: Vec<u32>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Named convex fixture with exact coordinates.
    Fixture {
        name: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Print the bundled trefoil lattice path.
    TrefoilPath {
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args, Clone, Debug, Default)]
pub struct OutArg {
    /// Artifact output path.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

/// Exit codes: success or decided, usage or input error, budget exceeded,
/// failed assertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    BudgetExceeded = 2,
    AssertionFailed = 3,
}

fn configure_threads() -> tightmorse::Execution {
    let threads = std::env::var("TIGHTMORSE_THREADS").ok().and_then(|s| s.parse::<usize>().ok());
    match threads {
        Some(0) | None => tightmorse::Execution::Parallel,
        Some(1) => tightmorse::Execution::Sequential,
        Some(n) => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            tightmorse::Execution::Parallel
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let exec = configure_threads();
    let result = match cli.command {
        Command::Betti { file, reduced } => commands::betti(&file, reduced),
        Command::Morse(cmd) => commands::morse(cmd),
        Command::Tight(cmd) => commands::tight(cmd, exec),
        Command::Check(cmd) => commands::check(cmd, exec),
        Command::Build(cmd) => commands::build(cmd),
    };
    match result {
        Ok((report, status)) => {
            println!("{}", report.render(cli.format));
            ExitCode::from(status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
