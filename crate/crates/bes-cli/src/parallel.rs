//! Worker-thread splits for the oracle and the embedding enumerator.
//!
//! Both searches partition cleanly: the oracle by the smallest chosen edge
//! id, the enumerator by the image of pattern vertex 0. Workers claim roots
//! from a shared counter and record one outcome per root; the merge then
//! walks roots in ascending order, so the reported result is the one the
//! single-threaded scan would produce no matter how many workers ran.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use bes_core::hypergraph::Hypergraph3;
use bes_core::search::{
    enumerate_proper_embeddings, exists_configuration_rooted, EmbeddingList, OracleLimits,
    OracleOutcome, PartitionScheme, StopCheck,
};

/// Wall-clock stop signal; `None` never stops.
pub struct Deadline {
    pub at: Option<Instant>,
}

impl Deadline {
    pub fn after_ms(budget_ms: Option<u64>) -> Self {
        Deadline {
            at: budget_ms.map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.at, Some(t) if Instant::now() >= t)
    }
}

impl StopCheck for Deadline {
    fn should_stop(&self) -> bool {
        self.passed()
    }
}

/// Decides `edges` edges on at most `max_vertices` vertices, with the
/// rooted subsearches spread over `threads` workers. Roots past the first
/// found one are skipped; the merge never reads them.
pub fn oracle_split(
    h: &Hypergraph3,
    edges: usize,
    max_vertices: usize,
    limits: &OracleLimits,
    threads: usize,
    deadline: &Deadline,
) -> OracleOutcome {
    let m = h.num_edges() as u32;
    if m == 0 || h.num_edges() < edges {
        return OracleOutcome::ExhaustedNone { nodes: 0 };
    }
    let next = AtomicU32::new(0);
    let min_found = AtomicU32::new(u32::MAX);
    let slots: Vec<Mutex<Option<OracleOutcome>>> = (0..m).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let r = next.fetch_add(1, Ordering::Relaxed);
                if r >= m {
                    break;
                }
                let out = if r > min_found.load(Ordering::Relaxed) {
                    // Skipped: a smaller root already holds a witness, so
                    // the merge stops before ever reaching this slot.
                    OracleOutcome::ExhaustedNone { nodes: 0 }
                } else if deadline.passed() {
                    // The in-search poll is coarse; checking here keeps
                    // tiny roots from outrunning an expired budget.
                    OracleOutcome::Stopped { nodes: 0 }
                } else {
                    let out =
                        exists_configuration_rooted(h, r, edges, max_vertices, limits, deadline);
                    if matches!(out, OracleOutcome::Found { .. }) {
                        min_found.fetch_min(r, Ordering::Relaxed);
                    }
                    out
                };
                *slots[r as usize].lock().unwrap() = Some(out);
            });
        }
    });
    let mut total_nodes = 0u64;
    for slot in slots {
        let outcome = slot.into_inner().unwrap().expect("every root claimed");
        match outcome {
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

pub enum EmbedSplit {
    Done(EmbeddingList),
    Timeout,
}

enum RootResult {
    List(EmbeddingList),
    Stopped,
}

/// Enumerates up to `limit` embeddings in ascending image order, splitting
/// on the image of pattern vertex 0. Every root is capped at `limit + 1`
/// finds, which is enough to decide the global truncation flag exactly.
pub fn embed_split(
    host: &Hypergraph3,
    pattern: &Hypergraph3,
    scheme: &PartitionScheme,
    limit: usize,
    threads: usize,
    deadline: &Deadline,
) -> EmbedSplit {
    assert!(pattern.num_vertices() >= 1, "pattern has no vertices");
    let roots: Vec<u32> = scheme.class(0).to_vec();
    let classes_rest: Vec<Vec<u32>> = (1..pattern.num_vertices())
        .map(|i| scheme.class(i).to_vec())
        .collect();
    let next = AtomicU32::new(0);
    let slots: Vec<Mutex<Option<RootResult>>> = roots.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed) as usize;
                if idx >= roots.len() {
                    break;
                }
                let result = if deadline.passed() {
                    RootResult::Stopped
                } else {
                    let mut classes: Vec<Vec<u32>> = Vec::with_capacity(classes_rest.len() + 1);
                    classes.push(vec![roots[idx]]);
                    classes.extend(classes_rest.iter().cloned());
                    let pinned = PartitionScheme::new(classes);
                    RootResult::List(enumerate_proper_embeddings(
                        host,
                        pattern,
                        &pinned,
                        limit + 1,
                    ))
                };
                *slots[idx].lock().unwrap() = Some(result);
            });
        }
    });
    let mut merged: Vec<Vec<u32>> = Vec::new();
    for slot in slots {
        let result = slot.into_inner().unwrap().expect("every root claimed");
        match result {
            RootResult::List(list) => {
                merged.extend(list.embeddings);
                if merged.len() > limit {
                    break;
                }
            }
            // Reached only while merged is short of the cap, so the root
            // that hit the deadline could still have mattered.
            RootResult::Stopped => return EmbedSplit::Timeout,
        }
    }
    let truncated = merged.len() > limit;
    merged.truncate(limit);
    EmbedSplit::Done(EmbeddingList {
        embeddings: merged,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bes_core::construct::kst_plus;
    use bes_core::lowerbounds::random_host;
    use bes_core::search::exists_configuration;
    use bes_core::search::NeverStop;

    #[test]
    fn split_oracle_matches_the_sequential_one() {
        let limits = OracleLimits::default();
        let no_deadline = Deadline { at: None };
        for seed in 0..40u64 {
            let h = random_host(9, 12, seed);
            for threads in [1usize, 4] {
                let split = oracle_split(&h, 4, 7, &limits, threads, &no_deadline);
                let whole = exists_configuration(&h, 4, 7, &limits, &NeverStop);
                match (&split, &whole) {
                    (
                        OracleOutcome::Found { edge_ids: a },
                        OracleOutcome::Found { edge_ids: b },
                    ) => assert_eq!(a, b),
                    (OracleOutcome::ExhaustedNone { .. }, OracleOutcome::ExhaustedNone { .. }) => {}
                    other => panic!("outcomes diverge: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn expired_deadline_stops_the_oracle() {
        let h = random_host(12, 20, 7);
        let limits = OracleLimits::default();
        let expired = Deadline {
            at: Some(Instant::now() - std::time::Duration::from_millis(1)),
        };
        let out = oracle_split(&h, 6, 9, &limits, 2, &expired);
        assert!(matches!(out, OracleOutcome::Stopped { .. }));
    }

    #[test]
    fn split_embeddings_are_thread_count_invariant() {
        let kp = kst_plus(2, 2);
        let host = kp.graph.clone();
        let n = host.num_vertices();
        let k = kp.graph.num_vertices();
        let scheme = PartitionScheme::unrestricted(k, n);
        let no_deadline = Deadline { at: None };
        let mut reference = None;
        for threads in [1usize, 2, 4] {
            let EmbedSplit::Done(list) =
                embed_split(&host, &kp.graph, &scheme, 5, threads, &no_deadline)
            else {
                panic!("no deadline set");
            };
            assert_eq!(list.embeddings.len(), 5);
            assert!(list.truncated);
            match &reference {
                None => reference = Some(list.embeddings),
                Some(r) => assert_eq!(r, &list.embeddings),
            }
        }
    }
}
