//! Reduction to a linear subhypergraph.
//!
//! If some vertex pair already sits in `target` edges those edges alone are
//! a configuration on `target + 2` vertices, which beats every bound the
//! rest of the pipeline aims for. Otherwise a greedy pass keeps a subset of
//! edges in which every pair appears at most once; since each discarded
//! edge shares a pair with an earlier kept edge and every pair lies in
//! fewer than `target` edges, the kept count is at least `m / (3·target - 2)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::certificate::ConfigurationCertificate;
use crate::hypergraph::Hypergraph3;
use crate::subset::VertexSubset;

pub enum LinearReduction {
    /// Some pair of vertices lies in `target` edges; their union is already
    /// a configuration with deficiency 2.
    DensePair(ConfigurationCertificate),
    /// Linear subhypergraph on the same vertex labels.
    Reduced {
        graph: Hypergraph3,
        /// Ids in the original host of the kept edges, ascending.
        kept_edge_ids: Vec<u32>,
    },
}

pub fn reduce_to_linear(h: &Hypergraph3, target: usize) -> LinearReduction {
    assert!(target >= 1);
    for (pair, ids) in h.pair_groups() {
        if ids.len() >= target {
            let mut vs = VertexSubset::empty(h.num_vertices());
            vs.insert(pair.0);
            vs.insert(pair.1);
            for &id in ids.iter().take(target) {
                for &v in h.edge(id as usize).iter() {
                    vs.insert(v);
                }
            }
            let cert = ConfigurationCertificate::from_vertex_set(h, &vs);
            debug_assert_eq!(cert.v as usize, target + 2);
            debug_assert!(cert.e as usize >= target);
            return LinearReduction::DensePair(cert);
        }
    }
    let mut used: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut kept = Vec::new();
    let mut kept_ids = Vec::new();
    for (id, e) in h.edges().iter().enumerate() {
        let ps = [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])];
        if ps.iter().any(|p| used.contains(p)) {
            continue;
        }
        for p in ps {
            used.insert(p);
        }
        kept.push(*e);
        kept_ids.push(id as u32);
    }
    let graph = Hypergraph3::new(h.num_vertices(), kept).expect("kept edges stay valid");
    debug_assert!(graph.is_linear());
    LinearReduction::Reduced {
        graph,
        kept_edge_ids: kept_ids,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_pair_short_circuits() {
        // Five edges through the pair (0, 1).
        let edges: Vec<[u32; 3]> = (0..5).map(|i| [0, 1, 2 + i]).collect();
        let h = Hypergraph3::new(7, edges).unwrap();
        match reduce_to_linear(&h, 4) {
            LinearReduction::DensePair(cert) => {
                assert_eq!(cert.e, 4);
                assert_eq!(cert.v, 6);
                cert.verify(&h).unwrap();
            }
            LinearReduction::Reduced { .. } => panic!("expected dense pair"),
        }
    }

    #[test]
    fn greedy_keeps_enough_edges() {
        // Three edges through (0, 1): below the target of 4, so the host is
        // thinned instead. Only the first survives.
        let h =
            Hypergraph3::new(8, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [5, 6, 7], [2, 5, 6]]).unwrap();
        match reduce_to_linear(&h, 4) {
            LinearReduction::Reduced {
                graph,
                kept_edge_ids,
            } => {
                assert!(graph.is_linear());
                assert_eq!(kept_edge_ids, [0, 3]);
                assert!(graph.num_edges() * (3 * 4 - 2) >= h.num_edges());
            }
            LinearReduction::DensePair(_) => panic!("no pair reaches the target"),
        }
    }
}
