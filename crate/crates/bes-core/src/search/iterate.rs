//! One densification step: glue disjoint pattern copies, or harvest a
//! sunflower from the conflicts that prevent gluing.
//!
//! Embeddings are bucketed by their pointwise image of the witness set A.
//! Inside a bucket, copies that are disjoint beyond A glue into an embedding
//! of the m-fold glued pattern. When no bucket supports a full group, the
//! overlaps themselves are structured: Erdos-Rado applied to the image sets
//! of copies crowding one accepted copy yields embeddings agreeing exactly
//! on a common core that strictly contains A, which is a sunflower
//! certificate ready for cleaning.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::construct::{glue_copies, glue_pair};
use crate::hypergraph::Hypergraph3;
use crate::structure::EligibilityWitness;
use crate::subset::VertexSubset;
use crate::sunflower::{erdos_rado, SunflowerCertificate};
use crate::trace::TraceSink;

#[derive(Debug)]
pub enum IterationOutcome {
    Glued {
        pattern: Hypergraph3,
        witness: Option<EligibilityWitness>,
        embeddings: Vec<Vec<u32>>,
    },
    Sunflower(SunflowerCertificate),
    Exhausted {
        bucket_sizes: Vec<usize>,
    },
}

/// Checks that `phi` maps `pattern` edge-for-edge into `host` injectively.
pub fn verify_embedding(
    pattern: &Hypergraph3,
    phi: &[u32],
    host: &Hypergraph3,
) -> Result<(), String> {
    if phi.len() != pattern.num_vertices() as usize {
        return Err(String::from("embedding length mismatch"));
    }
    if phi.iter().any(|&v| v >= host.num_vertices()) {
        return Err(String::from("embedding image out of range"));
    }
    let mut seen = phi.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(String::from("embedding not injective"));
    }
    for e in pattern.edges() {
        let mut im = [phi[e[0] as usize], phi[e[1] as usize], phi[e[2] as usize]];
        im.sort_unstable();
        if host.edges().binary_search(&im).is_err() {
            return Err(String::from("pattern edge missing in host"));
        }
    }
    Ok(())
}

fn image_beyond(phi: &[u32], in_a: &[bool]) -> Vec<u32> {
    let mut out: Vec<u32> = phi
        .iter()
        .enumerate()
        .filter(|(x, _)| !in_a[*x])
        .map(|(_, &v)| v)
        .collect();
    out.sort_unstable();
    out
}

fn sorted_disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return false,
        }
    }
    true
}

pub fn iteration_step(
    host: &Hypergraph3,
    pattern: &Hypergraph3,
    witness: &EligibilityWitness,
    embeddings: &[Vec<u32>],
    m: u32,
    trace: &mut dyn TraceSink,
) -> IterationOutcome {
    assert!(m >= 2);
    assert_eq!(witness.a.ground_size(), pattern.num_vertices());
    let a: Vec<u32> = witness.a.to_vec();
    let mut in_a = alloc::vec![false; pattern.num_vertices() as usize];
    for &x in &a {
        in_a[x as usize] = true;
    }

    let mut phis: Vec<Vec<u32>> = embeddings.to_vec();
    phis.sort_unstable();
    phis.dedup();
    for phi in &phis {
        verify_embedding(pattern, phi, host).expect("iteration input embedding");
    }

    let mut buckets: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, phi) in phis.iter().enumerate() {
        let key: Vec<u32> = a.iter().map(|&x| phi[x as usize]).collect();
        buckets.entry(key).or_default().push(i);
    }

    // Glue branch: chunks of m pairwise-disjoint-beyond-A copies per bucket.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut independent: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (key, members) in &buckets {
        let mut mis: Vec<usize> = Vec::new();
        let mut used: Vec<u32> = Vec::new();
        for &i in members {
            let beyond = image_beyond(&phis[i], &in_a);
            if sorted_disjoint(&used, &beyond) {
                for &v in &beyond {
                    used.push(v);
                }
                used.sort_unstable();
                mis.push(i);
            }
        }
        for chunk in mis.chunks(m as usize) {
            if chunk.len() == m as usize {
                groups.push(chunk.to_vec());
            }
        }
        independent.insert(key.clone(), mis);
    }

    if !groups.is_empty() {
        let (glued, next_witness) = if m == 2 {
            let (g, w) = glue_pair(pattern, witness);
            (g, Some(w))
        } else {
            (glue_copies(pattern, &witness.a, m), None)
        };
        let mut out = Vec::with_capacity(groups.len());
        for group in &groups {
            let mut combined = alloc::vec![u32::MAX; glued.graph.num_vertices() as usize];
            for (j, &i) in group.iter().enumerate() {
                let map = &glued.copy_maps[j];
                for (old, &new) in map.iter().enumerate() {
                    combined[new as usize] = phis[i][old];
                }
            }
            verify_embedding(&glued.graph, &combined, host).expect("glued embedding");
            out.push(combined);
        }
        out.sort_unstable();
        out.dedup();
        trace.note("iterate", "glued");
        return IterationOutcome::Glued {
            pattern: glued.graph,
            witness: next_witness,
            embeddings: out,
        };
    }

    // Sunflower branch: the best certificate extractable from any bucket.
    let k = pattern.deficiency();
    let mut best: Option<SunflowerCertificate> = None;
    for (key, members) in &buckets {
        if members.len() < 2 {
            continue;
        }
        let mis = &independent[key];
        if mis.len() == members.len() {
            continue;
        }
        // The accepted copy with the most overlapping bucket mates.
        let mut star: Option<(usize, Vec<usize>)> = None;
        for &i in mis {
            let bi = image_beyond(&phis[i], &in_a);
            let neighbors: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&j| j != i && !sorted_disjoint(&bi, &image_beyond(&phis[j], &in_a)))
                .collect();
            let keep = match &star {
                Some((_, ns)) => neighbors.len() > ns.len(),
                None => !neighbors.is_empty(),
            };
            if keep {
                star = Some((i, neighbors));
            }
        }
        let Some((star_i, neighbors)) = star else {
            continue;
        };
        let star_image: Vec<u32> = {
            let mut v = phis[star_i].clone();
            v.sort_unstable();
            v
        };
        // Group by shared preimage and by the values taken on it.
        let mut by_overlap: BTreeMap<(Vec<u32>, Vec<u32>), Vec<usize>> = BTreeMap::new();
        for &j in &neighbors {
            let phi = &phis[j];
            let mut pre: Vec<u32> = Vec::new();
            for (x, &v) in phi.iter().enumerate() {
                if star_image.binary_search(&v).is_ok() {
                    pre.push(x as u32);
                }
            }
            let vals: Vec<u32> = pre.iter().map(|&x| phi[x as usize]).collect();
            by_overlap.entry((pre, vals)).or_default().push(j);
        }
        let Some((_, group)) = by_overlap
            .iter()
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(a.0)))
        else {
            continue;
        };
        if group.len() < 2 {
            continue;
        }
        // The star copy shares the same overlap core, so it joins the pool.
        let mut pool: Vec<usize> = group.clone();
        pool.push(star_i);
        let family: Vec<Vec<u32>> = pool
            .iter()
            .map(|&j| {
                let mut v = phis[j].clone();
                v.sort_unstable();
                v
            })
            .collect();
        let mut found = None;
        for r in (2..=family.len()).rev() {
            if let Some((core, picked)) = erdos_rado(&family, r) {
                found = Some((core, picked));
                break;
            }
        }
        let Some((core, picked)) = found else {
            continue;
        };
        // Regroup by the exact preimage of the core and the values on it.
        let mut by_core: BTreeMap<(Vec<u32>, Vec<u32>), Vec<usize>> = BTreeMap::new();
        for &p in &picked {
            let j = pool[p];
            let phi = &phis[j];
            let mut pre: Vec<u32> = Vec::new();
            for (x, &v) in phi.iter().enumerate() {
                if core.binary_search(&v).is_ok() {
                    pre.push(x as u32);
                }
            }
            let vals: Vec<u32> = pre.iter().map(|&x| phi[x as usize]).collect();
            by_core.entry((pre, vals)).or_default().push(j);
        }
        let Some(((pre, _), sub)) = by_core
            .iter()
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(a.0)))
        else {
            continue;
        };
        if sub.len() < 2 {
            continue;
        }
        // The core must strictly extend A and keep the pattern deficient.
        if !a.iter().all(|x| pre.binary_search(x).is_ok()) {
            continue;
        }
        if pre.len() <= a.len() {
            continue;
        }
        let pre_set = VertexSubset::from_iter_n(pattern.num_vertices(), pre.iter().copied());
        if pattern.induced_deficiency(&pre_set) < k {
            continue;
        }
        let cert = SunflowerCertificate {
            pattern: pattern.clone(),
            core: pre.clone(),
            embeddings: sub.iter().map(|&j| phis[j].clone()).collect(),
        };
        if cert.verify(host).is_err() {
            continue;
        }
        let better = match &best {
            Some(b) => cert.r() > b.r(),
            None => true,
        };
        if better {
            best = Some(cert);
        }
    }
    if let Some(cert) = best {
        trace.note("iterate", "sunflower");
        return IterationOutcome::Sunflower(cert);
    }

    let bucket_sizes: Vec<usize> = buckets.values().map(|v| v.len()).collect();
    IterationOutcome::Exhausted { bucket_sizes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::kst_plus_witness;
    use crate::sunflower::build_sunflower;
    use crate::trace::NullTrace;

    #[test]
    fn rejects_broken_embedding() {
        let p = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        let h = Hypergraph3::new(5, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert!(verify_embedding(&p, &[0, 1, 2], &h).is_ok());
        assert!(verify_embedding(&p, &[0, 1, 3], &h).is_err());
        assert!(verify_embedding(&p, &[0, 0, 2], &h).is_err());
    }

    #[test]
    fn glues_two_disjoint_copies() {
        let (kp, w) = kst_plus_witness(4, 4).unwrap();
        let n = kp.graph.num_vertices();
        // Host: two copies glued along A, plus the canonical embeddings.
        let glued = glue_copies(&kp.graph, &w.a, 2);
        let host = glued.graph.clone();
        let phis: Vec<Vec<u32>> = glued.copy_maps.clone();
        assert_eq!(phis[0].len(), n as usize);
        match iteration_step(&host, &kp.graph, &w, &phis, 2, &mut NullTrace) {
            IterationOutcome::Glued {
                pattern,
                witness,
                embeddings,
            } => {
                assert_eq!(pattern, host);
                assert!(witness.is_some());
                assert_eq!(embeddings.len(), 1);
                let identity: Vec<u32> = (0..host.num_vertices()).collect();
                assert_eq!(embeddings[0], identity);
            }
            _ => panic!("expected glue"),
        }
    }

    #[test]
    fn harvests_a_sunflower_when_gluing_stalls() {
        // Five pattern copies agreeing exactly on A and one extra vertex:
        // pairwise overlaps beyond A block every 2-group, and the overlap
        // core is the same for all pairs, so a 5-petal sunflower comes out.
        let (kp, w) = kst_plus_witness(4, 4).unwrap();
        let mut core: Vec<u32> = w.a.to_vec();
        core.push(w.u);
        core.sort_unstable();
        let (host, maps) = build_sunflower(&kp.graph, &core, 5);
        match iteration_step(&host, &kp.graph, &w, &maps, 2, &mut NullTrace) {
            IterationOutcome::Sunflower(cert) => {
                assert_eq!(cert.r(), 5);
                assert_eq!(cert.core.len(), core.len());
                cert.verify(&host).unwrap();
            }
            IterationOutcome::Glued { .. } => panic!("copies overlap beyond A"),
            IterationOutcome::Exhausted { .. } => panic!("sunflower expected"),
        }
    }
}
