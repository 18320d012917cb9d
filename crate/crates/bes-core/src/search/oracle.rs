//! Exhaustive configuration search.
//!
//! Decides whether a host contains `edges` edges spanning at most
//! `max_vertices` vertices. Edge ids are chosen in ascending order, so the
//! first solution found is the lexicographically smallest one; the
//! vertex-count lower bound used for pruning never discards a branch that
//! still contains a solution, so the canonical answer is independent of
//! pruning. Splitting on the smallest chosen edge id (`rooted`) partitions
//! the search space exactly, which is what the parallel CLI mode relies on.

use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;
use crate::subset::VertexSubset;

pub trait StopCheck {
    fn should_stop(&self) -> bool;
}

pub struct NeverStop;

impl StopCheck for NeverStop {
    fn should_stop(&self) -> bool {
        false
    }
}

#[derive(Clone, Copy)]
pub struct OracleLimits {
    pub node_limit: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            node_limit: u64::MAX,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Found { edge_ids: Vec<u32> },
    ExhaustedNone { nodes: u64 },
    Stopped { nodes: u64 },
}

struct Dfs<'a> {
    h: &'a Hypergraph3,
    linear: bool,
    target: usize,
    max_v: usize,
    node_limit: u64,
    stop: &'a dyn StopCheck,
    nodes: u64,
    chosen: Vec<u32>,
    union: VertexSubset,
    union_list: Vec<u32>,
    found: Option<Vec<u32>>,
    stopped: bool,
}

impl<'a> Dfs<'a> {
    /// Minimum number of fresh vertices contributed by `remaining` more
    /// edges when `count` edges are already chosen.
    fn lookahead(&self, count: usize, remaining: usize) -> usize {
        let mut sum = 0usize;
        for i in 0..remaining {
            let priors = count + i;
            let cap = if self.linear { priors } else { 2 * priors };
            sum += 3usize.saturating_sub(cap);
        }
        sum
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.stopped = true;
        } else if self.nodes % 1024 == 0 && self.stop.should_stop() {
            self.stopped = true;
        }
        self.stopped
    }

    fn step(&mut self, last_id: i64) {
        if self.found.is_some() || self.tick() {
            return;
        }
        let count = self.chosen.len();
        if count == self.target {
            self.found = Some(self.chosen.clone());
            return;
        }
        let remaining = self.target - count;
        let budget = self.max_v as i64
            - self.union_list.len() as i64
            - self.lookahead(count + 1, remaining - 1) as i64;
        if budget < 0 {
            return;
        }
        let min_overlap = 3i64 - budget;
        let mut cands: Vec<u32> = Vec::new();
        if min_overlap >= 2 {
            for (i, &a) in self.union_list.iter().enumerate() {
                for &b in &self.union_list[i + 1..] {
                    let (a, b) = if a < b { (a, b) } else { (b, a) };
                    for &id in self.h.edges_with_pair(a, b) {
                        if id as i64 > last_id {
                            cands.push(id);
                        }
                    }
                }
            }
        } else if min_overlap == 1 {
            for &v in &self.union_list {
                for &id in self.h.incident_edges(v) {
                    if id as i64 > last_id {
                        cands.push(id);
                    }
                }
            }
        } else {
            cands.extend(((last_id + 1) as u32)..self.h.num_edges() as u32);
        }
        cands.sort_unstable();
        cands.dedup();
        for id in cands {
            let e = self.h.edge(id as usize);
            let fresh: Vec<u32> = e
                .iter()
                .copied()
                .filter(|&v| !self.union.contains(v))
                .collect();
            if fresh.len() as i64 > budget {
                continue;
            }
            self.chosen.push(id);
            for &v in &fresh {
                self.union.insert(v);
                self.union_list.push(v);
            }
            self.step(id as i64);
            for &v in &fresh {
                self.union.remove(v);
                self.union_list.pop();
            }
            self.chosen.pop();
            if self.found.is_some() || self.stopped {
                return;
            }
        }
    }

    fn outcome(self) -> OracleOutcome {
        if let Some(edge_ids) = self.found {
            OracleOutcome::Found { edge_ids }
        } else if self.stopped {
            OracleOutcome::Stopped { nodes: self.nodes }
        } else {
            OracleOutcome::ExhaustedNone { nodes: self.nodes }
        }
    }
}

fn fresh_dfs<'a>(
    h: &'a Hypergraph3,
    edges: usize,
    max_vertices: usize,
    limits: &OracleLimits,
    stop: &'a dyn StopCheck,
) -> Dfs<'a> {
    Dfs {
        h,
        linear: h.is_linear(),
        target: edges,
        max_v: max_vertices,
        node_limit: limits.node_limit,
        stop,
        nodes: 0,
        chosen: Vec::new(),
        union: VertexSubset::empty(h.num_vertices()),
        union_list: Vec::new(),
        found: None,
        stopped: false,
    }
}

pub fn exists_configuration(
    h: &Hypergraph3,
    edges: usize,
    max_vertices: usize,
    limits: &OracleLimits,
    stop: &dyn StopCheck,
) -> OracleOutcome {
    assert!(edges >= 1);
    if h.num_edges() < edges || max_vertices < 3 {
        return OracleOutcome::ExhaustedNone { nodes: 0 };
    }
    let mut total_nodes = 0u64;
    for root in 0..h.num_edges() as u32 {
        let sub = OracleLimits {
            node_limit: limits.node_limit.saturating_sub(total_nodes),
        };
        match run_rooted(h, root, edges, max_vertices, &sub, stop) {
            OracleOutcome::Found { edge_ids } => return OracleOutcome::Found { edge_ids },
            OracleOutcome::ExhaustedNone { nodes } => total_nodes += nodes,
            OracleOutcome::Stopped { nodes } => {
                return OracleOutcome::Stopped {
                    nodes: total_nodes + nodes,
                }
            }
        }
    }
    OracleOutcome::ExhaustedNone { nodes: total_nodes }
}

/// Searches only edge sets whose smallest member is `root`.
pub fn exists_configuration_rooted(
    h: &Hypergraph3,
    root: u32,
    edges: usize,
    max_vertices: usize,
    limits: &OracleLimits,
    stop: &dyn StopCheck,
) -> OracleOutcome {
    assert!(edges >= 1);
    if (root as usize) >= h.num_edges() || max_vertices < 3 {
        return OracleOutcome::ExhaustedNone { nodes: 0 };
    }
    run_rooted(h, root, edges, max_vertices, limits, stop)
}

fn run_rooted(
    h: &Hypergraph3,
    root: u32,
    edges: usize,
    max_vertices: usize,
    limits: &OracleLimits,
    stop: &dyn StopCheck,
) -> OracleOutcome {
    let mut dfs = fresh_dfs(h, edges, max_vertices, limits, stop);
    let e = h.edge(root as usize);
    if 3 + dfs.lookahead(1, edges - 1) <= max_vertices {
        dfs.chosen.push(root);
        for &v in e.iter() {
            dfs.union.insert(v);
            dfs.union_list.push(v);
        }
        dfs.step(root as i64);
    }
    dfs.outcome()
}

/// Reference implementation with no pruning beyond the final vertex count.
/// Exponential; only for cross-checking on tiny hosts.
pub fn exists_configuration_unpruned(
    h: &Hypergraph3,
    edges: usize,
    max_vertices: usize,
) -> Option<Vec<u32>> {
    fn rec(
        h: &Hypergraph3,
        edges: usize,
        max_vertices: usize,
        start: u32,
        chosen: &mut Vec<u32>,
    ) -> Option<Vec<u32>> {
        if chosen.len() == edges {
            let mut vs: Vec<u32> = Vec::with_capacity(3 * chosen.len());
            for &id in chosen.iter() {
                vs.extend_from_slice(&h.edge(id as usize));
            }
            vs.sort_unstable();
            vs.dedup();
            if vs.len() <= max_vertices {
                return Some(chosen.clone());
            }
            return None;
        }
        for id in start..h.num_edges() as u32 {
            chosen.push(id);
            if let Some(hit) = rec(h, edges, max_vertices, id + 1, chosen) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    rec(h, edges, max_vertices, 0, &mut Vec::new())
}
