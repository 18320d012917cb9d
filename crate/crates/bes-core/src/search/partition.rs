//! Seeded vertex tripartitions.
//!
//! Colors are a pure function of `(seed, trial, vertex)` so that adding or
//! removing edges never reshuffles a partition, and so that hosts built
//! around a known partition stay aligned with the one the driver recomputes.

use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;

/// Hosts below this size cannot be usefully tripartitioned.
pub const MIN_PARTITION_VERTICES: u32 = 12;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Color class (0, 1, or 2) of `v` in trial `trial` of the seeded partition.
pub fn color_of(seed: u64, trial: u32, v: u32) -> u8 {
    let mixed = splitmix(splitmix(seed ^ ((trial as u64) << 32)) ^ (v as u64));
    (mixed % 3) as u8
}

pub struct Tripartition {
    pub color: Vec<u8>,
    pub classes: [Vec<u32>; 3],
}

pub fn tripartition(n: u32, seed: u64, trial: u32) -> Tripartition {
    let mut color = Vec::with_capacity(n as usize);
    let mut classes = [Vec::new(), Vec::new(), Vec::new()];
    for v in 0..n {
        let c = color_of(seed, trial, v);
        color.push(c);
        classes[c as usize].push(v);
    }
    Tripartition { color, classes }
}

/// Number of edges with one vertex in each class.
pub fn tripartite_edge_count(h: &Hypergraph3, part: &Tripartition) -> usize {
    h.edges()
        .iter()
        .filter(|e| {
            let mut seen = [false; 3];
            for &v in e.iter() {
                seen[part.color[v as usize] as usize] = true;
            }
            seen[0] && seen[1] && seen[2]
        })
        .count()
}

fn classes_balanced(part: &Tripartition, n: u32) -> bool {
    let floor = (n / 4) as usize;
    part.classes.iter().all(|c| c.len() >= floor)
}

/// Trials ordered by decreasing tripartite edge count.
///
/// Trials where some class falls below a quarter of the vertices are
/// dropped as degenerate; if every trial is degenerate all of them are
/// ranked anyway so the caller always gets a schedule.
pub fn ranked_trials(h: &Hypergraph3, seed: u64, trials: u32) -> Vec<(u32, usize)> {
    let n = h.num_vertices();
    let mut scored: Vec<(u32, usize)> = (0..trials)
        .filter_map(|t| {
            let part = tripartition(n, seed, t);
            if classes_balanced(&part, n) {
                Some((t, tripartite_edge_count(h, &part)))
            } else {
                None
            }
        })
        .collect();
    if scored.is_empty() {
        scored = (0..trials)
            .map(|t| {
                let part = tripartition(n, seed, t);
                (t, tripartite_edge_count(h, &part))
            })
            .collect();
    }
    scored.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    scored
}
