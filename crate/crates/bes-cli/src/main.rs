//! Command line front end for the configuration search library.
//!
//! Subcommands: `construct` prints library patterns, `generate` emits host
//! hypergraphs, `search` hunts for configurations, `verify` checks
//! certificate files, `bench` times the main code paths. Identical seeds
//! give byte-identical stdout, whatever `--threads` says.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

mod bench;
mod certs;
mod construct;
mod exit;
mod format;
mod generate;
mod parallel;
mod search;
mod trace;
mod verify;

use exit::CliResult;
use generate::Kind;
use search::{Mode, SearchArgs};

#[derive(Parser)]
#[command(
    name = "bes",
    version,
    about = "Configuration search in 3-uniform hypergraphs"
)]
struct Cli {
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0xbe5)]
    seed: u64,
    /// Worker threads for the oracle and the embedding enumerator.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Also append the LDJSON run trace to this file.
    #[arg(long, global = true)]
    trace: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build library patterns and print them in the text format.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Emit host hypergraphs for experiments.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex count, difference-set range, or planted edge target,
        /// depending on the kind.
        #[arg(long)]
        n: Option<u32>,
        /// Scales edge or camouflage counts relative to `--n`.
        #[arg(long, default_value_t = 2.0)]
        density: f64,
        /// Planted seed pattern sides; defaults follow the target.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Hunt for configurations in a host file.
    Search {
        /// Pattern file for embed mode.
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        host: PathBuf,
        /// Demanded edge count.
        #[arg(long)]
        e: Option<usize>,
        /// Vertex bound: exact in oracle mode, a cap in bes mode.
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Wall-clock budget for oracle and embed modes.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Most embeddings to report in embed mode.
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// Seed pattern sides for bes mode; defaults follow `--e`.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
    },
    /// Check a certificate file against its host.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Time the main code paths on fixed inputs.
    Bench,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Complete bipartite pattern with one apex vertex per edge, plus the
    /// eligibility witness when the sides admit one.
    KstPlus {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
    /// Iterated pair-gluing from the seed pattern up to an edge target.
    Tower {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        target: usize,
        /// Which level to print; the top one if absent.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Glue m copies of a witnessed pattern file along its witness set.
    Glue {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
}

fn run(cli: Cli) -> CliResult {
    match cli.cmd {
        Cmd::Construct { what } => match what {
            ConstructCmd::KstPlus { s, t } => construct::kst_plus_cmd(s, t),
            ConstructCmd::Tower {
                s,
                t,
                target,
                level,
            } => construct::tower_cmd(s, t, target, level),
            ConstructCmd::Glue { input, m } => construct::glue_cmd(&input, m),
        },
        Cmd::Generate {
            kind,
            n,
            density,
            s,
            t,
        } => generate::generate(kind, n, density, s, t, cli.seed),
        Cmd::Search {
            pattern,
            host,
            e,
            v,
            mode,
            budget_ms,
            limit,
            s,
            t,
        } => search::search(SearchArgs {
            pattern,
            host,
            e,
            v,
            mode,
            budget_ms,
            limit,
            sides: (s, t),
            seed: cli.seed,
            threads: cli.threads,
            trace: cli.trace,
        }),
        Cmd::Verify { cert, host } => verify::verify(&cert, &host),
        Cmd::Bench => bench::bench(cli.seed, cli.threads),
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli)));
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
        // The panic hook has already printed the message.
        Err(_) => 5,
    };
    std::process::exit(code);
}
