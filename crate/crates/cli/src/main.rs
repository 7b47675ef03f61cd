//! Workbench for exceptional sequences of the linearly ordered type A
//! quiver: mutation walks with their chord diagrams, enumeration of
//! sequences, c-matrices, diagrams and partition chains, classification of
//! oriented diagrams, chord posets, permutation extraction, tree leaf
//! counts, and a battery of cross-checks.

mod commands;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ceswb_core::DEFAULT_BOUND;

/// Exceptional sequences of the linearly ordered type A quiver.
///
/// Mutation vertices on the command line are 1-based; boundary points of
/// the disk and the interval modules X(i,j) are 0-based.
#[derive(Parser)]
#[command(name = "ceswb", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Largest rank the exhaustive searches accept.
    #[arg(long, global = true, env = "CESWB_BOUND", default_value_t = DEFAULT_BOUND)]
    bound: usize,

    /// Worker threads for the sweeps; 0 lets the pool pick.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum EnumWhat {
    /// Complete exceptional sequences.
    Ces,
    /// c-matrices, rows sorted.
    Cmatrices,
    /// Spanning chord diagrams.
    Diagrams,
    /// Maximal chains of noncrossing partitions.
    Ncchains,
}

#[derive(Subcommand)]
enum Command {
    /// Walk a mutation sequence from the framed seed, reporting each step.
    Mutate {
        /// Rank of the quiver.
        #[arg(long)]
        n: usize,

        /// Comma-separated 1-based vertices to mutate at, in order.
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<usize>,
    },

    /// List objects of one family at a given rank.
    Enum {
        /// Rank of the quiver.
        #[arg(long)]
        n: usize,

        /// Family to list.
        #[arg(value_enum)]
        what: EnumWhat,

        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
    },

    /// Decide whether an oriented diagram pictures a c-matrix.
    Classify {
        /// Oriented diagram JSON file; standard input when omitted.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
    },

    /// Covers and linear extensions of the chord poset of a diagram.
    Poset {
        /// Chord diagram JSON file; standard input when omitted.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
    },

    /// Permutations and exceptional sequences read off a c-matrix.
    Perms {
        /// c-matrix JSON file (array of rows); standard input when omitted.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
    },

    /// Maximal partition chains, or chain and labeled-diagram conversion.
    Ncchains {
        /// Rank; lists the maximal chains on n+1 elements.
        #[arg(long)]
        n: Option<usize>,

        /// Chain (JSON array) or labeled diagram (JSON object) to convert;
        /// pass - for standard input.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,

        /// Print only the number of chains.
        #[arg(long)]
        count_only: bool,
    },

    /// Leaf counts of labeled trees against diagram extension counts.
    Trees {
        /// Rank; trees live on n+1 labeled vertices.
        #[arg(long)]
        n: usize,
    },

    /// Run the cross-check battery at a given rank.
    Verify {
        /// Rank of the quiver.
        #[arg(long)]
        n: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            Ok(buf)
        }
    }
}

fn run(cli: &Cli) -> Result<commands::Rendered> {
    match &cli.command {
        Command::Mutate { n, seq } => commands::mutate(*n, seq, cli.format),
        Command::Enum { n, what, count_only } => {
            commands::enumerate(*n, *what, *count_only, cli.bound, cli.format)
        }
        Command::Classify { input } => commands::classify(&read_input(input)?, cli.format),
        Command::Poset { input } => commands::poset(&read_input(input)?, cli.format),
        Command::Perms { input } => commands::perms(&read_input(input)?, cli.format),
        Command::Ncchains { n, input, count_only } => {
            let text = match input {
                Some(_) => Some(read_input(input)?),
                None => None,
            };
            commands::ncchains(*n, text.as_deref(), *count_only, cli.bound, cli.format)
        }
        Command::Trees { n } => commands::trees(*n, cli.format),
        Command::Verify { n } => commands::verify(*n, cli.bound, cli.format),
    }
}

fn try_main(cli: &Cli) -> Result<()> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let rendered = run(cli)?;
    match &cli.output {
        Some(path) => fs::write(path, &rendered.body)
            .with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout()
            .write_all(rendered.body.as_bytes())
            .context("writing standard output")?,
    }
    if let Some(failure) = rendered.failure {
        bail!(failure);
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = try_main(&cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
