//! Command-line front end for the majorant solver: argument parsing, file
//! formats and the subcommands.

pub mod commands;
pub mod error;
pub mod files;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "majorant", version, about = "Fourier majorants of finitely supported sequences on Z")]
pub struct Cli {
    /// Seed for all randomness, echoed in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the matched-norm majorant and verify it.
    Majorize {
        file: PathBuf,
        /// Write the solution as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative tolerance of the verification.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iters: usize,
    },
    /// Re-verify a solution file against its problem.
    Verify {
        solution: PathBuf,
        problem: PathBuf,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Decide whether a comma-separated set is a B_j set.
    Sidon {
        list: String,
        #[arg(long)]
        j: u32,
    },
    /// Exactness gap N(|a|) - N(a) and the predicted ratio.
    Gap { file: PathBuf },
    /// Solve every instance of a directory and print a CSV table.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Write a seeded random corpus of instance files.
    GenCorpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_width: usize,
        /// Orders, cycled over the instances.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        orders: Vec<u32>,
    },
}

/// Runs a parsed command, writing reports to `out` and progress to `log`.
pub fn run(cli: &Cli, out: &mut dyn Write, log: &mut dyn Write) -> Result<(), CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Majorize { file, out: path, tol, max_iters } => commands::majorize(
            &commands::MajorizeArgs { file: file.clone(), out: path.clone(), tol: *tol, max_iters: *max_iters, seed },
            out,
        ),
        Command::Verify { solution, problem, tol } => commands::verify(solution, problem, *tol, seed, out),
        Command::Sidon { list, j } => commands::sidon(list, *j, seed, out),
        Command::Gap { file } => commands::gap(file, seed, out),
        Command::Bench { dir, workers } => commands::bench(dir, *workers, seed, out, log),
        Command::GenCorpus { dir, count, max_width, orders } => {
            commands::gen_corpus(dir, *count, *max_width, orders, seed, out)
        }
    }
}
