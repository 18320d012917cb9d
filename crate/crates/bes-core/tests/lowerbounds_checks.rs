//! The progression-free difference sets, the tripartite host they induce,
//! and the random host generators.

use bes_core::lowerbounds::{
    ap3_violation, behrend_set, planted_host, random_host, random_linear_host, rs_hypergraph,
};

/// Independent triple-loop progression check.
fn has_progression(set: &[u32]) -> bool {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if set.binary_search(&(2 * b - a)).is_ok() && b != a {
                return true;
            }
        }
    }
    false
}

#[test]
fn behrend_sets_are_progression_free() {
    for n in 1..=200u32 {
        let b = behrend_set(n);
        assert!(!b.is_empty(), "n = {n}");
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert!(*b.last().unwrap() <= n);
        assert!(b[0] >= 1);
        assert!(!has_progression(&b), "n = {n}: {b:?}");
        assert!(ap3_violation(&b).is_none());
    }
}

#[test]
fn small_behrend_values_are_the_greedy_ones() {
    assert_eq!(behrend_set(1), vec![1]);
    assert_eq!(behrend_set(2), vec![1, 2]);
    assert_eq!(behrend_set(10), vec![1, 2, 4, 5, 10]);
    // The sphere construction carries the asymptotics; sanity-check density.
    assert!(behrend_set(1000).len() >= 40, "{}", behrend_set(1000).len());
}

#[test]
fn progression_checker_finds_violations() {
    assert_eq!(ap3_violation(&[1, 2, 3]), Some((1, 2, 3)));
    assert!(ap3_violation(&[1, 2, 4, 5, 10]).is_none());
    assert!(ap3_violation(&[3]).is_none());
    assert_eq!(ap3_violation(&[2, 5, 8]), Some((2, 5, 8)));
}

#[test]
fn rs_hosts_are_linear_tripartite_and_sized() {
    for n in [5u32, 17, 60, 143] {
        let b = behrend_set(n);
        let h = rs_hypergraph(n, &b).unwrap();
        assert_eq!(h.num_vertices(), 6 * n);
        assert_eq!(h.num_edges(), n as usize * b.len());
        assert!(h.is_linear());
        for e in h.edges() {
            assert!(e[0] < n, "first vertex in the first block");
            assert!(
                n <= e[1] && e[1] < 3 * n,
                "second vertex in the second block"
            );
            assert!(
                3 * n <= e[2] && e[2] < 6 * n,
                "third vertex in the third block"
            );
        }
    }
    assert!(
        rs_hypergraph(10, &[0]).is_err(),
        "difference 0 out of range"
    );
    assert!(rs_hypergraph(10, &[11]).is_err(), "difference beyond n");
    assert!(rs_hypergraph(10, &[3, 3]).is_err(), "repeated difference");
}

#[test]
fn progressions_become_tight_triples() {
    // A progression (b1, b2, b3) plus the start x = 2(b2 - b1) + 1 yields
    // three host edges on six vertices: the first two share the start, the
    // third re-uses one vertex of each.
    let n = 20u32;
    let (b1, b2, b3) = (1u32, 3, 5);
    let bad = vec![b1, b2, b3];
    let h = rs_hypergraph(n, &bad).unwrap();
    let d = b2 - b1;
    let x = 2 * d + 1;
    let y = x - 2 * d;
    let edge = |x: u32, b: u32| [x - 1, n + (x + b) - 2, 3 * n + (x + 2 * b) - 3];
    let triple = [edge(x, b1), edge(x, b2), edge(y, b3)];
    let mut union: Vec<u32> = triple.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    assert_eq!(union.len(), 6);
    for e in &triple {
        assert!(h.edges().binary_search(e).is_ok(), "edge {e:?} missing");
    }
}

#[test]
fn random_hosts_honor_their_contracts() {
    for seed in 0..30u64 {
        let lin = random_linear_host(14, 9, seed);
        assert_eq!(lin.num_vertices(), 14);
        assert_eq!(lin.num_edges(), 9);
        assert!(lin.is_linear());
        assert_eq!(lin, random_linear_host(14, 9, seed));

        let gen = random_host(12, 16, seed);
        assert_eq!(gen.num_edges(), 16);
        assert_eq!(gen, random_host(12, 16, seed));
    }
    assert_ne!(random_host(12, 16, 1), random_host(12, 16, 2));
}

#[test]
fn planted_hosts_are_linear_and_deterministic() {
    for (target, s, t, noise) in [
        (12usize, 3u32, 4u32, 30usize),
        (24, 3, 4, 50),
        (48, 4, 4, 60),
    ] {
        let h = planted_host(target, s, t, noise, 0xbe5);
        assert!(h.is_linear());
        assert!(h.num_edges() >= noise, "noise edges present");
        assert_eq!(h, planted_host(target, s, t, noise, 0xbe5));
        assert_ne!(h, planted_host(target, s, t, noise, 0xbe6));
    }
}

// Linearity kills (7, 4) and (8, 5) on these hosts just as the
// progression-free construction kills (6, 3); the oracle confirms both
// exactly. Split in two so the runner overlaps them.
fn assert_rs_hosts_avoid(edges: usize, max_v: usize) {
    use bes_core::search::{exists_configuration, NeverStop, OracleLimits, OracleOutcome};
    let limits = OracleLimits {
        node_limit: 500_000_000,
    };
    for n in 1..=60u32 {
        let b = behrend_set(n);
        let h = rs_hypergraph(n, &b).unwrap();
        match exists_configuration(&h, edges, max_v, &limits, &NeverStop) {
            OracleOutcome::ExhaustedNone { .. } => {}
            other => panic!("rs({n}) unexpectedly produced {edges} edges: {other:?}"),
        }
    }
}

#[test]
fn rs_hosts_avoid_seven_four() {
    assert_rs_hosts_avoid(4, 7);
}

#[test]
fn rs_hosts_avoid_eight_five() {
    assert_rs_hosts_avoid(5, 8);
}
