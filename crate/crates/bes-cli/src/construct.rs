//! The `construct` subcommands: print library patterns as text files.

use std::path::Path;

use bes_core::construct::{build_tower, glue_copies, glue_pair, kst_plus, kst_plus_witness};

use crate::exit::{input_error, CliResult};
use crate::format::{parse_host, serialize_host, HostFile};

pub fn kst_plus_cmd(s: u32, t: u32) -> CliResult {
    if s < 1 || t < 1 {
        return Err(input_error("side lengths must be positive"));
    }
    let file = match kst_plus_witness(s, t) {
        Some((kp, w)) => HostFile {
            graph: kp.graph,
            witness: Some(w),
        },
        // Sides too small for a spanning tree pair still name a pattern,
        // just not one that can seed gluing.
        None => HostFile {
            graph: kst_plus(s, t).graph,
            witness: None,
        },
    };
    print!("{}", serialize_host(&file));
    Ok(())
}

pub fn tower_cmd(s: u32, t: u32, target: usize, level: Option<usize>) -> CliResult {
    let Some(tower) = build_tower(s, t, target) else {
        return Err(input_error(format!(
            "sides ({s}, {t}) admit no spanning tree pair, so no tower starts there"
        )));
    };
    let idx = level.unwrap_or(tower.levels.len() - 1);
    let Some((graph, witness)) = tower.levels.get(idx) else {
        return Err(input_error(format!(
            "tower for target {target} has levels 0..{}, got --level {idx}",
            tower.levels.len() - 1
        )));
    };
    let file = HostFile {
        graph: graph.clone(),
        witness: Some(witness.clone()),
    };
    print!("{}", serialize_host(&file));
    Ok(())
}

pub fn glue_cmd(input: &Path, m: u32) -> CliResult {
    if m < 2 {
        return Err(input_error("--m must be at least 2"));
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| input_error(format!("{}: {e}", input.display())))?;
    let host = parse_host(&text).map_err(|e| input_error(format!("{}: {e}", input.display())))?;
    let Some(w) = host.witness else {
        return Err(input_error(
            "gluing needs a witness trailer naming the overlap set",
        ));
    };
    let file = if m == 2 {
        let (glued, next) = glue_pair(&host.graph, &w);
        HostFile {
            graph: glued.graph,
            witness: Some(next),
        }
    } else {
        HostFile {
            graph: glue_copies(&host.graph, &w.a, m).graph,
            witness: None,
        }
    };
    print!("{}", serialize_host(&file));
    Ok(())
}
