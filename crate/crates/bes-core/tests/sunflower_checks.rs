//! Sunflower machinery: the extraction lemma, the deficiency formula, and
//! cleaning down to exact edge counts.

use bes_core::construct::kst_plus_witness;
use bes_core::lowerbounds::random_linear_host;
use bes_core::rng::seeded;
use bes_core::sunflower::{
    build_sunflower, clean_sunflower, erdos_rado, trim_to_edges, SunflowerCertificate,
};
use bes_core::{Hypergraph3, VertexSubset};
use rand::Rng;

fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_ok())
        .collect()
}

/// Validates that the picked sets pairwise intersect in exactly the core.
fn assert_sunflower(family: &[Vec<u32>], core: &[u32], picks: &[usize]) {
    for &p in picks {
        assert!(core.iter().all(|x| family[p].binary_search(x).is_ok()));
    }
    for (i, &p) in picks.iter().enumerate() {
        for &q in &picks[i + 1..] {
            assert_eq!(
                sorted_intersection(&family[p], &family[q]),
                core,
                "sets {p} and {q} overlap beyond the core"
            );
        }
    }
}

fn random_family(
    count: usize,
    set_size: usize,
    universe: u32,
    rng: &mut impl Rng,
) -> Vec<Vec<u32>> {
    let mut family: Vec<Vec<u32>> = Vec::new();
    while family.len() < count {
        let mut s: Vec<u32> = Vec::new();
        while s.len() < set_size {
            let x = rng.random_range(0..universe);
            if !s.contains(&x) {
                s.push(x);
            }
        }
        s.sort_unstable();
        if !family.contains(&s) {
            family.push(s);
        }
    }
    family
}

#[test]
fn extraction_succeeds_above_the_counting_bound() {
    let mut rng = seeded(31_101, 4);
    for r in 2..=4usize {
        // kappa = 2, so kappa! * (r-1)^kappa = 2(r-1)^2 distinct sets force
        // an r-sunflower; one more set makes the guarantee strict.
        let need = 2 * (r - 1) * (r - 1) + 1;
        for _ in 0..40 {
            let family = random_family(need, 2, 14, &mut rng);
            let (core, picks) = erdos_rado(&family, r)
                .unwrap_or_else(|| panic!("guarantee failed for r = {r}: {family:?}"));
            assert_eq!(picks.len(), r);
            assert_sunflower(&family, &core, &picks);
        }
    }
}

#[test]
fn extraction_output_is_always_a_sunflower() {
    let mut rng = seeded(31_102, 4);
    let mut found = 0u32;
    for _ in 0..300 {
        let count = rng.random_range(2..=10);
        let size = rng.random_range(1..=4);
        let family = random_family(count, size, 12, &mut rng);
        for r in 2..=count {
            if let Some((core, picks)) = erdos_rado(&family, r) {
                assert_eq!(picks.len(), r);
                assert_sunflower(&family, &core, &picks);
                found += 1;
            }
        }
        // Determinism: same family, same answer.
        assert_eq!(erdos_rado(&family, 2), erdos_rado(&family, 2));
    }
    assert!(found > 100, "sample found too few sunflowers: {found}");
}

#[test]
fn disjoint_families_always_yield_full_sunflowers() {
    // r pairwise disjoint sets have the empty core.
    let family: Vec<Vec<u32>> = (0..6u32).map(|i| vec![3 * i, 3 * i + 1]).collect();
    let (core, picks) = erdos_rado(&family, 6).unwrap();
    assert!(core.is_empty());
    assert_eq!(picks.len(), 6);
}

#[test]
fn sunflower_deficiency_formula_is_structural() {
    let mut rng = seeded(31_103, 4);
    for case in 0..150u64 {
        let n = rng.random_range(7..=11);
        let m = rng.random_range(3..=n as usize - 3);
        let pattern = random_linear_host(n, m, 40_000 + case);
        let core_size = rng.random_range(1..=n - 2);
        let mut core: Vec<u32> = Vec::new();
        while (core.len() as u32) < core_size {
            let x = rng.random_range(0..n);
            if !core.contains(&x) {
                core.push(x);
            }
        }
        core.sort_unstable();
        let r = rng.random_range(2..=5);

        let (tilde, embeddings) = build_sunflower(&pattern, &core, r);
        let core_set = VertexSubset::from_iter_n(n, core.iter().copied());
        let du = pattern.induced_deficiency(&core_set);
        let df = pattern.deficiency();
        assert_eq!(
            tilde.deficiency(),
            df + (r as i64 - 1) * (df - du),
            "case {case}"
        );

        let cert = SunflowerCertificate {
            pattern: pattern.clone(),
            core: core.clone(),
            embeddings,
        };
        cert.verify(&tilde).unwrap();
        assert_eq!(cert.deficiency_value(), tilde.deficiency());
        // Valid sunflower cores have deficiency at least the pattern's, and
        // then the whole sunflower never exceeds the pattern's deficiency.
        if du >= df {
            assert!(tilde.deficiency() <= df);
        }
    }
}

#[test]
fn embeddings_agree_exactly_on_the_core() {
    let (kp, w) = kst_plus_witness(4, 4).unwrap();
    let mut core = w.a.to_vec();
    core.push(w.u);
    core.sort_unstable();
    let (tilde, embeddings) = build_sunflower(&kp.graph, &core, 4);
    assert_eq!(embeddings.len(), 4);
    for phi in &embeddings {
        assert_eq!(phi.len() as u32, kp.graph.num_vertices());
    }
    for i in 0..embeddings.len() {
        for j in i + 1..embeddings.len() {
            for x in 0..kp.graph.num_vertices() {
                let agree = embeddings[i][x as usize] == embeddings[j][x as usize];
                assert_eq!(agree, core.binary_search(&x).is_ok(), "vertex {x}");
            }
        }
    }
    // Core is independent of deficiency k, so the sunflower sits flat.
    assert_eq!(tilde.deficiency(), kp.graph.deficiency());
}

#[test]
fn cleaning_reaches_exact_edge_counts() {
    let (kp, w) = kst_plus_witness(3, 4).unwrap();
    let pattern = kp.graph.clone();
    let df = pattern.deficiency();
    let mut core = w.a.to_vec();
    core.push(w.u);
    core.sort_unstable();

    for target in [24usize, 25, 36, 71, 72] {
        let r = target;
        let (host, embeddings) = build_sunflower(&pattern, &core, r as u32);
        let cert = SunflowerCertificate {
            pattern: pattern.clone(),
            core: core.clone(),
            embeddings,
        };
        let cleaned = clean_sunflower(&host, &cert, target)
            .unwrap_or_else(|e| panic!("target {target}: {e}"));
        cleaned.verify(&host).unwrap();
        let inside = host.edges_inside(&cleaned.to_subset(host.num_vertices()));
        assert_eq!(inside as usize, target, "target {target}");
        assert!(cleaned.v as i64 <= target as i64 + df);
    }
}

#[test]
fn trimming_error_paths_are_reported() {
    let tight = Hypergraph3::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
    let all = VertexSubset::full(4);
    assert!(
        trim_to_edges(&tight, &all, 2).is_err(),
        "no degree-1 vertex to remove"
    );
    assert!(trim_to_edges(&tight, &all, 9).is_err(), "cannot trim up");
    let exact = trim_to_edges(&tight, &all, 4).unwrap();
    assert_eq!((exact.v, exact.e), (4, 4));
}
