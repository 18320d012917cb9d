//! Explicit constructions feeding the gluing pipeline.
//!
//! * [`kst_plus`] builds `K_{s,t}^+`: one 3-edge per edge of the complete
//!   bipartite graph `K_{s,t}`, each completed by its own fresh apex vertex.
//! * [`spanning_tree_pair`] builds two edge-disjoint spanning trees of
//!   `K_{s,t}`, which exist exactly when `st >= 2(s + t - 1)` (and here are
//!   produced explicitly for `s, t >= 3`). The apex sets of the two trees
//!   are the witness sets making `K_{s,t}^+` eligible for gluing.
//! * [`glue_copies`] takes `m` disjoint copies of a hypergraph and
//!   identifies them along a set `A`, the core step that doubles edge count
//!   while growing deficiency by one per extra copy.
//! * [`glue_pair`] is the witnessed version: it also transports the
//!   eligibility witness to the glued hypergraph.

use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;
use crate::structure::{independence_violation, EligibilityWitness};
use crate::subset::VertexSubset;

/// `K_{s,t}^+` with its labeling fixed: left vertices `0..s`, right vertices
/// `s..s+t`, and the apex of bipartite edge `(i, j)` at `s + t + i*t + j`.
#[derive(Debug, Clone)]
pub struct KstPlus {
    pub s: u32,
    pub t: u32,
    pub graph: Hypergraph3,
}

impl KstPlus {
    pub fn left(&self, i: u32) -> u32 {
        debug_assert!(i < self.s);
        i
    }

    pub fn right(&self, j: u32) -> u32 {
        debug_assert!(j < self.t);
        self.s + j
    }

    pub fn apex(&self, i: u32, j: u32) -> u32 {
        debug_assert!(i < self.s && j < self.t);
        self.s + self.t + i * self.t + j
    }
}

/// Builds `K_{s,t}^+`: `s + t + st` vertices, `st` edges, deficiency `s + t`.
pub fn kst_plus(s: u32, t: u32) -> KstPlus {
    assert!(s >= 1 && t >= 1, "kst_plus needs positive side sizes");
    let n = s + t + s * t;
    let edges = (0..s).flat_map(|i| (0..t).map(move |j| [i, s + j, s + t + i * t + j]));
    let graph = Hypergraph3::new(n, edges).expect("apex labels are fresh by construction");
    KstPlus { s, t, graph }
}

/// Two edge-disjoint spanning trees of `K_{s,t}`, as lists of `(left index,
/// right index)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePair {
    pub first: Vec<(u32, u32)>,
    pub second: Vec<(u32, u32)>,
}

/// Two edge-disjoint spanning trees of `K_{s,t}`, or `None` when
/// `s < 3`, `t < 3` or `st < 2(s + t - 1)`.
///
/// Shape: each tree is two stars joined by a short path, so almost every
/// vertex is a leaf. That keeps the apex sets of the trees heavy on
/// degree-1 vertices of `K_{s,t}^+`, which is what the eligibility degree
/// bound needs.
pub fn spanning_tree_pair(s: u32, t: u32) -> Option<TreePair> {
    if s < 3 || t < 3 || s * t < 2 * (s + t - 1) {
        return None;
    }
    let mut first: Vec<(u32, u32)> = Vec::new();
    for j in 0..=t - 3 {
        first.push((0, j));
    }
    for i in 1..s {
        first.push((i, t - 1));
    }
    first.push((1, t - 2));
    first.push((2, 0));

    let mut second: Vec<(u32, u32)> = Vec::new();
    for j in 0..=t - 3 {
        second.push((1, j));
    }
    for i in 0..s {
        if i != 1 {
            second.push((i, t - 2));
        }
    }
    second.push((0, t - 1));
    // Connector between the two stars of the second tree. For t == 3 the
    // generic choice (2, 1) collides with the star at t-2 = 1, so a fourth
    // left vertex (present: st >= 2(s+t-1) forces s >= 4 there) is used.
    if t == 3 {
        second.push((3, 0));
    } else {
        second.push((2, 1));
    }

    let pair = TreePair { first, second };
    assert_tree_pair(s, t, &pair);
    Some(pair)
}

fn assert_tree_pair(s: u32, t: u32, pair: &TreePair) {
    for (name, tree) in [("first", &pair.first), ("second", &pair.second)] {
        assert_eq!(
            tree.len() as u32,
            s + t - 1,
            "{} tree of K_{{{},{}}} has wrong edge count",
            name,
            s,
            t
        );
        let mut uf: Vec<u32> = (0..s + t).collect();
        fn find(uf: &mut [u32], mut x: u32) -> u32 {
            while uf[x as usize] != x {
                uf[x as usize] = uf[uf[x as usize] as usize];
                x = uf[x as usize];
            }
            x
        }
        let mut merged = 0;
        for &(i, j) in tree {
            assert!(i < s && j < t, "tree edge ({}, {}) out of range", i, j);
            let (a, b) = (find(&mut uf, i), find(&mut uf, s + j));
            assert!(
                a != b,
                "{} tree of K_{{{},{}}} has a cycle at ({}, {})",
                name,
                s,
                t,
                i,
                j
            );
            uf[a as usize] = b;
            merged += 1;
        }
        assert_eq!(merged, s + t - 1);
    }
    let mut all: Vec<(u32, u32)> = pair.first.iter().chain(&pair.second).copied().collect();
    all.sort_unstable();
    for w in all.windows(2) {
        assert!(
            w[0] != w[1],
            "trees of K_{{{},{}}} share edge {:?}",
            s,
            t,
            w[0]
        );
    }
}

/// `K_{s,t}^+` with an eligibility witness: the apex sets of two
/// edge-disjoint spanning trees, plus the two smallest left vertices.
///
/// `None` when no tree pair exists or `k = s + t` leaves the witness sets
/// ill-sized.
pub fn kst_plus_witness(s: u32, t: u32) -> Option<(KstPlus, EligibilityWitness)> {
    let trees = spanning_tree_pair(s, t)?;
    let kp = kst_plus(s, t);
    let n = kp.graph.num_vertices();
    let a = VertexSubset::from_iter_n(n, trees.first.iter().map(|&(i, j)| kp.apex(i, j)));
    let b = VertexSubset::from_iter_n(n, trees.second.iter().map(|&(i, j)| kp.apex(i, j)));
    let w = EligibilityWitness {
        a,
        b,
        u: kp.left(0),
        v: kp.left(1),
    };
    Some((kp, w))
}

/// Result of identifying copies along a set: the glued hypergraph and, per
/// copy, the map from input label to output label.
#[derive(Debug, Clone)]
pub struct Glued {
    pub graph: Hypergraph3,
    pub copy_maps: Vec<Vec<u32>>,
}

/// Glues `m >= 1` copies of `h` along the independent set `a`.
///
/// Labeling: copy 1 keeps all labels; vertices of `a` are shared by every
/// copy; the other vertices of copy `j >= 2` are packed after copy `j - 1`
/// in ascending original order. With `v` vertices, `e` edges and `|a| = a0`,
/// the result has `m*v - (m-1)*a0` vertices and `m*e` edges.
pub fn glue_copies(h: &Hypergraph3, a: &VertexSubset, m: u32) -> Glued {
    assert!(m >= 1, "gluing needs at least one copy");
    assert_eq!(
        a.ground_size(),
        h.num_vertices(),
        "glue set sized for a different vertex range"
    );
    assert!(
        independence_violation(h, a).is_none(),
        "glue set must be independent (no edge of the hypergraph inside it)"
    );
    let n = h.num_vertices();
    let a0 = a.len();
    let non_a: Vec<u32> = (0..n).filter(|&x| !a.contains(x)).collect();
    let nn = n + (m - 1) * (n - a0);

    let mut copy_maps: Vec<Vec<u32>> = Vec::with_capacity(m as usize);
    copy_maps.push((0..n).collect());
    for j in 2..=m {
        let mut map = vec![u32::MAX; n as usize];
        for x in a.iter() {
            map[x as usize] = x;
        }
        let base = n + (j - 2) * (n - a0);
        for (r, &x) in non_a.iter().enumerate() {
            map[x as usize] = base + r as u32;
        }
        copy_maps.push(map);
    }

    let edges = copy_maps.iter().flat_map(|map| {
        h.edges()
            .iter()
            .map(move |e| [map[e[0] as usize], map[e[1] as usize], map[e[2] as usize]])
    });
    let graph = Hypergraph3::new(nn, edges)
        .expect("copies of a valid hypergraph glued along an independent set stay valid");
    Glued { graph, copy_maps }
}

/// Glues two copies of `h` along the first witness set and transports the
/// witness: the new first set is `B` (copy 1) plus `v` (copy 2), the new
/// second set is `B` (copy 2) plus `v` (copy 1), and the spare vertices are
/// `u`'s two images.
///
/// Deficiency grows by exactly one, so the transported sets again have size
/// `deficiency - 1`.
pub fn glue_pair(h: &Hypergraph3, w: &EligibilityWitness) -> (Glued, EligibilityWitness) {
    let glued = glue_copies(h, &w.a, 2);
    let map2 = &glued.copy_maps[1];
    let nn = glued.graph.num_vertices();
    let mut a2 = VertexSubset::empty(nn);
    for x in w.b.iter() {
        a2.insert(x);
    }
    a2.insert(map2[w.v as usize]);
    let mut b2 = VertexSubset::empty(nn);
    for x in w.b.iter() {
        b2.insert(map2[x as usize]);
    }
    b2.insert(w.v);
    let w2 = EligibilityWitness {
        a: a2,
        b: b2,
        u: w.u,
        v: map2[w.u as usize],
    };
    (glued, w2)
}

/// A pair-gluing tower: level 0 is `K_{s,t}^+` with its witness, and each
/// later level glues two copies of the previous one along its first witness
/// set. Level `j` has deficiency `s + t + j` and `2^j * s * t` edges.
pub struct Tower {
    pub levels: Vec<(Hypergraph3, EligibilityWitness)>,
}

/// Builds the tower deep enough for `target` edges: levels `0..=l` with
/// `l = max(floor(log2(target / (s*t))) - 1, 0)`.
pub fn build_tower(s: u32, t: u32, target: usize) -> Option<Tower> {
    let (kp, w0) = kst_plus_witness(s, t)?;
    let st = kp.graph.num_edges();
    let depth = if target > st {
        (target / st).ilog2().saturating_sub(1)
    } else {
        0
    };
    let mut levels: Vec<(Hypergraph3, EligibilityWitness)> = Vec::with_capacity(depth as usize + 1);
    levels.push((kp.graph, w0));
    for _ in 0..depth {
        let (glued, w) = {
            let (last, lw) = levels.last().expect("level 0 present");
            glue_pair(last, lw)
        };
        levels.push((glued.graph, w));
    }
    Some(Tower { levels })
}
