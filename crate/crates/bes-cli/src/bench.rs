//! The `bench` subcommand: time the main code paths on fixed inputs.
//!
//! Sizes and outcomes go to stdout and depend only on the seed; wall times
//! go to stderr where they cannot disturb output comparisons.

use std::time::Instant;

use bes_core::construct::{build_tower, kst_plus};
use bes_core::lowerbounds::{behrend_set, planted_host, rs_hypergraph};
use bes_core::search::{find_bes, OracleLimits, OracleOutcome, SearchConfig};
use bes_core::trace::NullTrace;

use crate::exit::{CliResult, Failure};
use crate::parallel::{oracle_split, Deadline};

fn timed<T>(label: &str, body: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = body();
    eprintln!("# {label} {:?}", start.elapsed());
    out
}

pub fn bench(seed: u64, threads: usize) -> CliResult {
    let kp = timed("kst-plus", || kst_plus(16, 16));
    let max_degree = (0..kp.graph.num_vertices())
        .map(|v| kp.graph.degree(v))
        .max()
        .unwrap_or(0);
    println!(
        "kst-plus s=16 t=16 vertices={} edges={} max-degree={max_degree}",
        kp.graph.num_vertices(),
        kp.graph.num_edges()
    );

    let tower = timed("tower", || build_tower(4, 4, 256)).expect("sides (4, 4) carry a tower");
    let (top, _) = tower.levels.last().expect("tower has levels");
    println!(
        "tower s=4 t=4 target=256 levels={} top-edges={}",
        tower.levels.len(),
        top.num_edges()
    );

    let b = behrend_set(40);
    let rs = rs_hypergraph(40, &b).map_err(Failure::Input)?;
    let outcome = timed("oracle", || {
        oracle_split(
            &rs,
            3,
            6,
            &OracleLimits::default(),
            threads,
            &Deadline { at: None },
        )
    });
    let verdict = match outcome {
        OracleOutcome::Found { .. } => "found",
        OracleOutcome::ExhaustedNone { .. } => "exhausted-none",
        OracleOutcome::Stopped { .. } => "stopped",
    };
    println!("oracle rs-host n=40 e=3 v=6 outcome={verdict}");

    let host = planted_host(24, 3, 4, 60, seed);
    let cfg = SearchConfig {
        seed,
        seed_sides: Some((3, 4)),
        ..SearchConfig::default()
    };
    let cert = timed("driver", || find_bes(&host, 24, &cfg, &mut NullTrace))
        .map_err(|e| Failure::Internal(format!("bench driver failed: {e}")))?;
    println!(
        "driver planted target=24 v={} e={} deficiency={}",
        cert.v,
        cert.e,
        cert.deficiency()
    );
    Ok(())
}
