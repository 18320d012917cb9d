//! Host generators: progression-free sets, the Ruzsa-Szemeredi linear
//! hypergraph built on them, random hosts, and hosts with a planted pattern
//! aligned to the seeded tripartition the search driver will recompute.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::construct::{glue_copies, kst_plus, kst_plus_witness, KstPlus};
use crate::hypergraph::Hypergraph3;
use crate::rng::seeded;
use crate::search::partition::{color_of, MIN_PARTITION_VERTICES};

/// First arithmetic progression of length three inside `set`, as
/// `(a, b, c)` with `a + c = 2b`, or `None` if the set is progression-free.
pub fn ap3_violation(set: &[u32]) -> Option<(u32, u32, u32)> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            let c = 2 * (b as u64) - (a as u64);
            if c <= u32::MAX as u64 && sorted.binary_search(&(c as u32)).is_ok() {
                return Some((a, b, c as u32));
            }
        }
    }
    None
}

fn greedy_ap3_free(n: u32) -> Vec<u32> {
    let mut kept: Vec<u32> = Vec::new();
    let mut present = alloc::vec![false; (n + 1) as usize];
    for x in 1..=n {
        // Only b in (x/2, x) can complete a progression (a, b, x).
        let lo = kept.partition_point(|&b| 2 * (b as u64) <= x as u64);
        let bad = kept[lo..]
            .iter()
            .any(|&b| present[(2 * (b as u64) - (x as u64)) as usize]);
        if !bad {
            kept.push(x);
            present[x as usize] = true;
        }
    }
    kept
}

fn behrend_spheres(n: u32) -> Vec<u32> {
    let mut best: Vec<u32> = Vec::new();
    for d in 2..=20u32 {
        // Digits in [0, m) with base 2m keep sums carry-free.
        let mut m = 1u64;
        while (2 * (m + 1)).pow(d) <= n as u64 {
            m += 1;
        }
        if m < 2 {
            continue;
        }
        let base = 2 * m;
        let count = m.pow(d);
        let mut buckets: alloc::collections::BTreeMap<u64, Vec<u32>> =
            alloc::collections::BTreeMap::new();
        for idx in 0..count {
            let mut rem = idx;
            let mut value = 0u64;
            let mut norm = 0u64;
            let mut place = 1u64;
            for _ in 0..d {
                let digit = rem % m;
                rem /= m;
                value += digit * place;
                place *= base;
                norm += digit * digit;
            }
            buckets.entry(norm).or_default().push((value + 1) as u32);
        }
        if let Some(bucket) = buckets.values().max_by_key(|b| b.len()) {
            if bucket.len() > best.len() {
                best = bucket.clone();
            }
        }
    }
    best.sort_unstable();
    best
}

/// A progression-free subset of `1..=n`: the larger of a Behrend-style
/// sphere bucket and a greedy scan, re-verified before returning.
pub fn behrend_set(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let greedy = greedy_ap3_free(n);
    let sphere = behrend_spheres(n);
    let best = if sphere.len() > greedy.len() {
        sphere
    } else {
        greedy
    };
    assert!(
        ap3_violation(&best).is_none(),
        "progression-free construction failed its own check"
    );
    best
}

/// The Ruzsa-Szemeredi host on `6n` vertices: one edge per `(x, b)` with
/// `x` in `1..=n` and `b` drawn from `b_set`, joining `x - 1`,
/// `n + (x + b) - 2` and `3n + (x + 2b) - 3`. Always linear; it contains a
/// (6, 3)-configuration exactly when `b_set` has a 3-term progression.
pub fn rs_hypergraph(n: u32, b_set: &[u32]) -> Result<Hypergraph3, String> {
    if n == 0 {
        return Err(String::from("empty ground range"));
    }
    let mut seen = BTreeSet::new();
    for &b in b_set {
        if b < 1 || b > n {
            return Err(format!("shift {b} outside 1..={n}"));
        }
        if !seen.insert(b) {
            return Err(format!("shift {b} repeats"));
        }
    }
    let mut edges = Vec::with_capacity((n as usize) * b_set.len());
    for x in 1..=n {
        for &b in b_set {
            edges.push([x - 1, n + (x + b) - 2, 3 * n + (x + 2 * b) - 3]);
        }
    }
    Hypergraph3::new(6 * n, edges).map_err(|e| format!("{e}"))
}

/// Random host whose every vertex pair lies in at most one edge.
pub fn random_linear_host(n: u32, m: usize, seed: u64) -> Hypergraph3 {
    assert!(n >= 3);
    let mut rng = seeded(seed, 0);
    let mut used: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut edges: Vec<[u32; 3]> = Vec::with_capacity(m);
    let mut attempts = 0usize;
    while edges.len() < m {
        attempts += 1;
        assert!(
            attempts < 200 * m + 1000,
            "could not place {m} linear edges on {n} vertices"
        );
        let mut e = [0u32; 3];
        e[0] = rng.random_range(0..n);
        e[1] = rng.random_range(0..n);
        e[2] = rng.random_range(0..n);
        let mut s = e;
        s.sort_unstable();
        if s[0] == s[1] || s[1] == s[2] {
            continue;
        }
        let ps = [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])];
        if ps.iter().any(|p| used.contains(p)) {
            continue;
        }
        for p in ps {
            used.insert(p);
        }
        edges.push(s);
    }
    Hypergraph3::new(n, edges).expect("pair-disjoint triples are distinct")
}

/// Random host with no linearity constraint (duplicate edges still barred).
pub fn random_host(n: u32, m: usize, seed: u64) -> Hypergraph3 {
    assert!(n >= 3);
    let mut rng = seeded(seed, 2);
    let mut used: BTreeSet<[u32; 3]> = BTreeSet::new();
    let mut attempts = 0usize;
    while used.len() < m {
        attempts += 1;
        assert!(
            attempts < 200 * m + 1000,
            "could not place {m} edges on {n} vertices"
        );
        let mut e = [
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        ];
        e.sort_unstable();
        if e[0] == e[1] || e[1] == e[2] {
            continue;
        }
        used.insert(e);
    }
    Hypergraph3::new(n, used).expect("distinct sorted triples")
}

fn base_roles(kp: &KstPlus) -> Vec<u8> {
    let n = kp.graph.num_vertices();
    let mut roles = alloc::vec![2u8; n as usize];
    for i in 0..kp.s {
        roles[kp.left(i) as usize] = 0;
    }
    for j in 0..kp.t {
        roles[kp.right(j) as usize] = 1;
    }
    roles
}

/// Host hiding exactly the structure `find_bes` hunts for a target of
/// `target` edges with seed sides `(s, t)`: one pattern copy when
/// `s*t >= target`, otherwise 2 or 4 copies glued along the witness set,
/// mirroring the driver's own plan. Plant vertices are placed inside the
/// classes of trial 0 of the seeded tripartition, and `noise` random edges
/// are added without ever repeating a vertex pair, so the whole host stays
/// linear and the plant survives the linear reduction.
pub fn planted_host(target: usize, s: u32, t: u32, noise: usize, seed: u64) -> Hypergraph3 {
    assert!(target >= 1);
    let st = (s as usize) * (t as usize);
    let (plant, roles) = if st >= target {
        let kp = kst_plus(s, t);
        let roles = base_roles(&kp);
        (kp.graph, roles)
    } else {
        assert!(
            target < 4 * st,
            "plants deeper than one gluing stage are not supported"
        );
        let m = if 2 * st >= target { 2 } else { 4 };
        let (kp, w) = kst_plus_witness(s, t).expect("plant sides admit no spanning tree pair");
        let base = base_roles(&kp);
        let glued = glue_copies(&kp.graph, &w.a, m);
        let mut roles = alloc::vec![0u8; glued.graph.num_vertices() as usize];
        for map in &glued.copy_maps {
            for (old, &new) in map.iter().enumerate() {
                roles[new as usize] = base[old];
            }
        }
        (glued.graph, roles)
    };

    let pv = plant.num_vertices() as usize;
    let mut need = [0usize; 3];
    for &r in &roles {
        need[r as usize] += 1;
    }
    let mut n = (pv as u32 + 8).max(MIN_PARTITION_VERTICES);
    let pools = loop {
        let mut pools: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for v in 0..n {
            pools[color_of(seed, 0, v) as usize].push(v);
        }
        let fits = (0..3).all(|c| pools[c].len() >= need[c]);
        let balanced = pools.iter().all(|p| p.len() >= (n / 4) as usize);
        if fits && balanced {
            break pools;
        }
        n += 16;
    };
    let mut next = [0usize; 3];
    let mut to_host = alloc::vec![0u32; pv];
    for x in 0..pv {
        let c = roles[x] as usize;
        to_host[x] = pools[c][next[c]];
        next[c] += 1;
    }

    let mut edges: Vec<[u32; 3]> = Vec::new();
    let mut used: BTreeSet<(u32, u32)> = BTreeSet::new();
    for e in plant.edges() {
        let mut m = [
            to_host[e[0] as usize],
            to_host[e[1] as usize],
            to_host[e[2] as usize],
        ];
        m.sort_unstable();
        for p in [(m[0], m[1]), (m[0], m[2]), (m[1], m[2])] {
            assert!(used.insert(p), "plant lost linearity in transport");
        }
        edges.push(m);
    }
    let mut rng = seeded(seed, 1);
    let mut placed = 0usize;
    let mut attempts = 0usize;
    while placed < noise && attempts < 200 * noise + 1000 {
        attempts += 1;
        let mut e = [
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        ];
        e.sort_unstable();
        if e[0] == e[1] || e[1] == e[2] {
            continue;
        }
        let ps = [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])];
        if ps.iter().any(|p| used.contains(p)) {
            continue;
        }
        for p in ps {
            used.insert(p);
        }
        edges.push(e);
        placed += 1;
    }
    Hypergraph3::new(n, edges).expect("pairwise fresh pairs keep triples distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_progression_free_sets() {
        assert!(behrend_set(10).len() >= 5);
        for n in 1..=50 {
            let b = behrend_set(n);
            assert!(ap3_violation(&b).is_none());
            assert!(b.iter().all(|&x| 1 <= x && x <= n));
        }
    }

    #[test]
    fn violation_is_reported() {
        assert_eq!(ap3_violation(&[1, 2, 3]), Some((1, 2, 3)));
        assert_eq!(ap3_violation(&[1, 2, 4, 5, 10]), None);
        assert_eq!(ap3_violation(&[7, 1, 4]), Some((1, 4, 7)));
    }

    #[test]
    fn rs_host_shape() {
        let b = alloc::vec![1, 2];
        let h = rs_hypergraph(4, &b).unwrap();
        assert_eq!(h.num_vertices(), 24);
        assert_eq!(h.num_edges(), 8);
        assert!(h.is_linear());
    }

    #[test]
    fn rs_rejects_bad_shifts() {
        assert!(rs_hypergraph(4, &[0]).is_err());
        assert!(rs_hypergraph(4, &[5]).is_err());
        assert!(rs_hypergraph(4, &[2, 2]).is_err());
    }

    #[test]
    fn random_hosts_are_deterministic() {
        let a = random_linear_host(30, 25, 9);
        let b = random_linear_host(30, 25, 9);
        assert_eq!(a, b);
        assert!(a.is_linear());
        let c = random_host(12, 15, 3);
        let d = random_host(12, 15, 3);
        assert_eq!(c, d);
        assert_eq!(c.num_edges(), 15);
    }

    #[test]
    fn planted_host_is_linear_and_sized() {
        let h = planted_host(12, 3, 4, 20, 5);
        assert!(h.is_linear());
        assert_eq!(h.num_edges(), 12 + 20);
        let g = planted_host(24, 3, 4, 10, 5);
        // Two glued copies of the 12-edge pattern plus noise.
        assert_eq!(g.num_edges(), 34);
    }
}
