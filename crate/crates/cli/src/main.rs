//! `ispec`: interval-spectrum queries on small graphs.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 search budget exhausted,
//! 3 a corpus verdict contradicted the galaxy characterization.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use interval_spectrum::search::{SearchConfig, DEFAULT_MAX_NODES};
use interval_spectrum::VerifyOptions;

use crate::commands::Outcome;
use crate::input::Format;

#[derive(Parser)]
#[command(name = "ispec", version, about = "Interval edge-coloring spectra of small graphs")]
struct Cli {
    /// Graph input format
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: Format,

    /// Search-node budget (per row or per graph)
    #[arg(long, default_value_t = DEFAULT_MAX_NODES, global = true)]
    budget: u64,

    /// Emit JSON on standard output
    #[arg(long, global = true)]
    json: bool,

    /// Search worker threads
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is a galaxy and print its decomposition
    Recognize {
        /// Graph file, or - for standard input
        input: String,
    },
    /// mu1/mu2 per palette size and the four aggregates
    Mu {
        input: String,
        /// Only this palette size
        #[arg(long)]
        t: Option<u32>,
    },
    /// Interval t-coloring of a galaxy, as "u v c" lines
    Color {
        input: String,
        #[arg(long)]
        t: u32,
    },
    /// Check a coloring: properness, surjectivity and f
    Check {
        graph: String,
        /// File of "u v c" lines
        coloring: String,
        /// Palette size (defaults to the largest color)
        #[arg(long)]
        t: Option<u32>,
    },
    /// Palette sizes admitting an interval coloring, with w and W
    Spread { input: String },
    /// Check mu21(G) = |V(G)| against galaxy recognition over a graph6 corpus
    VerifyTheorem {
        corpus: String,
        /// Also check that an interval |E|-coloring exists exactly for galaxies
        #[arg(long)]
        prop2: bool,
        /// Include per-t mu rows
        #[arg(long)]
        verbose: bool,
        /// Graphs checked concurrently
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let config = SearchConfig::with_workers(cli.workers);
    match cli.command {
        Command::Recognize { input } => commands::recognize(&input::load_graph(&input, cli.format)?, cli.json),
        Command::Mu { input, t } => {
            commands::mu(&input::load_graph(&input, cli.format)?, t, cli.budget, &config, cli.json)
        }
        Command::Color { input, t } => commands::color(&input::load_graph(&input, cli.format)?, t, cli.json),
        Command::Check { graph, coloring, t } => {
            let g = input::load_graph(&graph, cli.format)?;
            let c = input::parse_coloring(&g, &input::read_source(&coloring)?, t)?;
            commands::check(&g, &c, cli.json)
        }
        Command::Spread { input } => commands::spread(&input::load_graph(&input, cli.format)?, cli.budget, cli.json),
        Command::VerifyTheorem { corpus, prop2, verbose, jobs } => {
            let opts = VerifyOptions { max_nodes: cli.budget, prop2, verbose, jobs, search: config };
            commands::verify_theorem(&input::read_source(&corpus)?, &opts, cli.json)
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
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::BudgetExceeded) => ExitCode::from(2),
        Ok(Outcome::Inconsistent) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
