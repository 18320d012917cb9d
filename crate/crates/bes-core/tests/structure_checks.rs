//! Cross-checks of the pruned good-set and span verifiers against raw
//! subset enumeration on small random hosts.

use bes_core::lowerbounds::random_host;
use bes_core::rng::seeded;
use bes_core::structure::{
    verify_good_set, verify_good_set_exhaustive, verify_good_set_reduced, verify_span_condition,
    GoodSetVerdict, SpanVerdict, DEFAULT_NODE_BUDGET,
};
use bes_core::{Hypergraph3, VertexSubset};
use rand::Rng;

/// Collapses a verdict to a comparable class, validating any witness it
/// carries against the host directly.
fn classify(h: &Hypergraph3, a: &VertexSubset, v: &GoodSetVerdict) -> &'static str {
    match v {
        GoodSetVerdict::Good => "good",
        GoodSetVerdict::NotIndependent { edge } => {
            assert!(
                edge.iter().all(|&x| a.contains(x)),
                "not-independent witness must lie inside the set"
            );
            assert!(h.edges().contains(edge));
            "bad"
        }
        GoodSetVerdict::Violation { superset } => {
            assert!(a.is_subset_of(superset));
            assert!(
                superset.len() > a.len(),
                "violating superset must be strict"
            );
            assert!(
                h.induced_deficiency(superset) <= a.len() as i64,
                "violating superset must have deficiency at most |A|"
            );
            "bad"
        }
        GoodSetVerdict::Inconclusive { .. } => "inconclusive",
    }
}

fn random_subset(n: u32, size: usize, rng: &mut impl Rng) -> VertexSubset {
    let mut s = VertexSubset::empty(n);
    while (s.len() as usize) < size.min(n as usize) {
        s.insert(rng.random_range(0..n));
    }
    s
}

#[test]
fn good_set_verifiers_agree_on_random_hosts() {
    let mut rng = seeded(17_011, 9);
    let mut verdicts = [0u32; 2];
    for case in 0..300u64 {
        let n = rng.random_range(6..=12);
        let m = rng.random_range(3..=12);
        let h = random_host(n, m, case);
        let a = random_subset(n, rng.random_range(0..=4), &mut rng);

        let pruned = verify_good_set(&h, &a, DEFAULT_NODE_BUDGET);
        let exhaustive = verify_good_set_exhaustive(&h, &a);
        let reduced = verify_good_set_reduced(&h, &a);

        let cp = classify(&h, &a, &pruned);
        let ce = classify(&h, &a, &exhaustive);
        let cr = classify(&h, &a, &reduced);
        assert_ne!(cp, "inconclusive", "budget ample for these sizes");
        assert_eq!(cp, ce, "case {case}: pruned vs exhaustive");
        assert_eq!(cp, cr, "case {case}: pruned vs reduced");
        verdicts[(cp == "good") as usize] += 1;
    }
    // The sample must exercise both outcomes or the test is vacuous.
    assert!(
        verdicts[0] > 20 && verdicts[1] > 20,
        "skewed sample: {verdicts:?}"
    );
}

/// Raw span oracle: scans every nonempty edge subset.
fn span_violation_exists(h: &Hypergraph3) -> bool {
    let m = h.num_edges();
    assert!(m <= 16);
    for mask in 1u32..(1 << m) {
        let mut vs = VertexSubset::empty(h.num_vertices());
        for id in 0..m {
            if mask >> id & 1 == 1 {
                for &x in &h.edge(id) {
                    vs.insert(x);
                }
            }
        }
        if vs.len() <= mask.count_ones() + 1 {
            return true;
        }
    }
    false
}

#[test]
fn span_checker_matches_subset_enumeration() {
    let mut rng = seeded(17_012, 9);
    let mut hits = 0u32;
    for case in 0..200u64 {
        let n = rng.random_range(5..=11);
        let m = rng.random_range(2..=9);
        let h = random_host(n, m, 10_000 + case);
        let expected = span_violation_exists(&h);
        match verify_span_condition(&h, DEFAULT_NODE_BUDGET) {
            SpanVerdict::Holds => assert!(!expected, "case {case}: missed a violation"),
            SpanVerdict::Violation { edge_ids } => {
                assert!(expected, "case {case}: phantom violation");
                assert!(!edge_ids.is_empty());
                let mut vs = VertexSubset::empty(h.num_vertices());
                for &id in &edge_ids {
                    for &x in &h.edge(id as usize) {
                        vs.insert(x);
                    }
                }
                assert!(
                    vs.len() as usize <= edge_ids.len() + 1,
                    "witness spans too many vertices"
                );
                hits += 1;
            }
            SpanVerdict::Inconclusive { .. } => panic!("budget ample for these sizes"),
        }
    }
    assert!(hits > 20, "skewed sample: {hits} violations in 200 cases");
}

#[test]
fn subsets_of_good_sets_stay_good() {
    let mut rng = seeded(17_013, 9);
    let mut checked = 0u32;
    for case in 0..200u64 {
        let n = rng.random_range(6..=12);
        let m = rng.random_range(3..=10);
        let h = random_host(n, m, 20_000 + case);
        let a = random_subset(n, rng.random_range(2..=4), &mut rng);
        if !matches!(verify_good_set_exhaustive(&h, &a), GoodSetVerdict::Good) {
            continue;
        }
        let all = a.to_vec();
        for drop in &all {
            let mut sub = a.clone();
            sub.remove(*drop);
            assert!(
                matches!(verify_good_set_exhaustive(&h, &sub), GoodSetVerdict::Good),
                "case {case}: subset of a good set must be good"
            );
        }
        checked += 1;
    }
    assert!(checked > 20, "too few good sets sampled: {checked}");
}

#[test]
fn empty_set_good_iff_positive_deficiency_everywhere() {
    // For the empty set the goodness condition says every nonempty vertex
    // set spans fewer edges than vertices.
    let peak = Hypergraph3::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
    let empty = VertexSubset::empty(4);
    assert!(matches!(
        verify_good_set(&peak, &empty, DEFAULT_NODE_BUDGET),
        GoodSetVerdict::Violation { .. }
    ));

    let sparse = Hypergraph3::new(7, vec![[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
    let empty = VertexSubset::empty(7);
    assert!(matches!(
        verify_good_set(&sparse, &empty, DEFAULT_NODE_BUDGET),
        GoodSetVerdict::Good
    ));
}
