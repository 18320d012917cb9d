//! Sunflowers of embeddings and their conversion into configurations.
//!
//! A sunflower certificate is a pattern hypergraph `F`, a core `U ⊊ V(F)`,
//! and `r` embeddings of `F` into a host that agree pointwise exactly on `U`
//! (same images on `U`, pairwise disjoint images elsewhere). The union of
//! `p` of the embeddings spans `e(U) + p * (e(F) - e(U))` edges or more
//! while its deficiency stays at most
//! `Δ(F) + (p - 1) * (Δ(F) - Δ_F(U))`,
//! so whenever the core is at least as deficient as the pattern, taking
//! enough petals and trimming degree-1 vertices yields an
//! `(e + Δ(F), e)`-configuration for any feasible `e`: that is
//! [`clean_sunflower`].
//!
//! [`erdos_rado`] is the classic sunflower extraction over plain set
//! families (greedy disjoint subfamily, else recurse on the link of the most
//! frequent element), used by the search engine when many embeddings
//! overlap.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::certificate::ConfigurationCertificate;
use crate::hypergraph::Hypergraph3;
use crate::subset::VertexSubset;

/// `r` embeddings of a pattern into a host, agreeing exactly on a core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerCertificate {
    pub pattern: Hypergraph3,
    /// Pattern labels of the core, strictly ascending, a strict subset of
    /// the pattern's vertices.
    pub core: Vec<u32>,
    /// Each embedding maps pattern label `x` to host label `embedding[x]`.
    pub embeddings: Vec<Vec<u32>>,
}

impl SunflowerCertificate {
    pub fn r(&self) -> usize {
        self.embeddings.len()
    }

    pub fn core_subset(&self) -> VertexSubset {
        VertexSubset::from_iter_n(self.pattern.num_vertices(), self.core.iter().copied())
    }

    /// Induced deficiency of the core inside the pattern.
    pub fn core_deficiency(&self) -> i64 {
        self.pattern.induced_deficiency(&self.core_subset())
    }

    /// Upper bound on the deficiency of the union of all `r` petals:
    /// `Δ(F) + (r - 1) * (Δ(F) - Δ_F(U))`.
    pub fn deficiency_value(&self) -> i64 {
        let d = self.pattern.deficiency();
        d + (self.r() as i64 - 1) * (d - self.core_deficiency())
    }

    /// Checks the sunflower property against a host.
    pub fn verify(&self, host: &Hypergraph3) -> Result<(), String> {
        let v = self.pattern.num_vertices();
        for w in self.core.windows(2) {
            if w[0] >= w[1] {
                return Err(String::from("core is not strictly ascending"));
            }
        }
        if let Some(&last) = self.core.last() {
            if last >= v {
                return Err(format!("core label {} outside the pattern", last));
            }
        }
        if self.core.len() as u32 >= v {
            return Err(String::from(
                "core must be a strict subset of the pattern vertices",
            ));
        }
        if self.embeddings.is_empty() {
            return Err(String::from("no embeddings"));
        }
        for (i, phi) in self.embeddings.iter().enumerate() {
            if phi.len() as u32 != v {
                return Err(format!("embedding {} has wrong length", i));
            }
            let mut sorted = phi.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("embedding {} is not injective", i));
            }
            if sorted.last().copied().unwrap_or(0) >= host.num_vertices() {
                return Err(format!("embedding {} leaves the host vertex range", i));
            }
            for e in self.pattern.edges() {
                let mut img = [phi[e[0] as usize], phi[e[1] as usize], phi[e[2] as usize]];
                img.sort_unstable();
                if host.edges().binary_search(&img).is_err() {
                    return Err(format!(
                        "embedding {} maps edge {:?} to {:?}, absent from the host",
                        i, e, img
                    ));
                }
            }
        }
        // Pointwise agreement on the core.
        let first = &self.embeddings[0];
        for (i, phi) in self.embeddings.iter().enumerate().skip(1) {
            for &c in &self.core {
                if phi[c as usize] != first[c as usize] {
                    return Err(format!(
                        "embeddings 0 and {} disagree on core vertex {}",
                        i, c
                    ));
                }
            }
        }
        // Pairwise disjoint petal images.
        let core_set = self.core_subset();
        let petals: Vec<Vec<u32>> = self
            .embeddings
            .iter()
            .map(|phi| {
                let mut p: Vec<u32> = (0..v)
                    .filter(|&x| !core_set.contains(x))
                    .map(|x| phi[x as usize])
                    .collect();
                p.sort_unstable();
                p
            })
            .collect();
        for i in 0..petals.len() {
            for j in i + 1..petals.len() {
                if sorted_intersect(&petals[i], &petals[j]) {
                    return Err(format!(
                        "embeddings {} and {} overlap outside the core",
                        i, j
                    ));
                }
            }
        }
        Ok(())
    }

    /// Union of the images of the first `p` embeddings.
    pub fn union_of_petals(&self, host_n: u32, p: usize) -> VertexSubset {
        let mut w = VertexSubset::empty(host_n);
        for phi in &self.embeddings[..p] {
            for &x in phi {
                w.insert(x);
            }
        }
        w
    }
}

fn sorted_intersect(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Builds the abstract sunflower of `r` copies of `pattern` glued exactly
/// along `core`, with canonical labels: core vertices first (in core order),
/// then one block per petal holding the non-core vertices in ascending
/// pattern order.
///
/// Returns the sunflower hypergraph and, per petal, the map from pattern
/// label to sunflower label. The maps form a sunflower certificate of the
/// returned hypergraph over itself.
pub fn build_sunflower(
    pattern: &Hypergraph3,
    core: &[u32],
    r: u32,
) -> (Hypergraph3, Vec<Vec<u32>>) {
    assert!(r >= 1, "a sunflower needs at least one petal");
    let v = pattern.num_vertices();
    let core_set = VertexSubset::from_iter_n(v, core.iter().copied());
    assert_eq!(core_set.len() as usize, core.len(), "core labels repeat");
    assert!((core.len() as u32) < v, "core must be a strict subset");
    let c = core.len() as u32;
    let non_core: Vec<u32> = (0..v).filter(|&x| !core_set.contains(x)).collect();

    let mut maps: Vec<Vec<u32>> = Vec::with_capacity(r as usize);
    for petal in 0..r {
        let mut map = vec![u32::MAX; v as usize];
        for (rank, &x) in core.iter().enumerate() {
            map[x as usize] = rank as u32;
        }
        let base = c + petal * (v - c);
        for (rank, &x) in non_core.iter().enumerate() {
            map[x as usize] = base + rank as u32;
        }
        maps.push(map);
    }

    let nn = c + r * (v - c);
    let mut edges: Vec<[u32; 3]> = Vec::new();
    for (petal, map) in maps.iter().enumerate() {
        for e in pattern.edges() {
            let all_core = e.iter().all(|&x| core_set.contains(x));
            if all_core && petal > 0 {
                continue;
            }
            edges.push([map[e[0] as usize], map[e[1] as usize], map[e[2] as usize]]);
        }
    }
    let graph = Hypergraph3::new(nn, edges)
        .expect("petal blocks are disjoint, so sunflower edges cannot collide");
    (graph, maps)
}

/// Classic sunflower extraction: given a family of sets, returns a core `C`
/// and at least `r` member indices whose sets pairwise intersect exactly in
/// `C`, or `None` if the recursion bottoms out first.
///
/// Strategy: deduplicate, greedily collect a maximal pairwise-disjoint
/// subfamily (empty core), otherwise recurse on the link of the most
/// frequent element. Guaranteed to succeed when the family holds more than
/// `k! * (r - 1)^k` distinct sets of size at most `k`.
pub fn erdos_rado(family: &[Vec<u32>], r: usize) -> Option<(Vec<u32>, Vec<usize>)> {
    assert!(r >= 2, "a sunflower needs at least two members");
    let normalized: Vec<Vec<u32>> = family
        .iter()
        .map(|s| {
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            t
        })
        .collect();
    let indices: Vec<usize> = (0..family.len()).collect();
    erdos_rado_rec(&normalized, &indices, r)
}

fn erdos_rado_rec(
    sets: &[Vec<u32>],
    indices: &[usize],
    r: usize,
) -> Option<(Vec<u32>, Vec<usize>)> {
    // Deduplicate, keeping the first occurrence.
    let mut seen: Vec<&[u32]> = Vec::new();
    let mut kept: Vec<usize> = Vec::new();
    for (pos, s) in sets.iter().enumerate() {
        if !seen.iter().any(|t| *t == s.as_slice()) {
            seen.push(s.as_slice());
            kept.push(pos);
        }
    }

    // Greedy maximal disjoint subfamily.
    let mut used: Vec<u32> = Vec::new();
    let mut disjoint: Vec<usize> = Vec::new();
    for &pos in &kept {
        if sets[pos].iter().all(|x| used.binary_search(x).is_err()) {
            disjoint.push(pos);
            for &x in &sets[pos] {
                let at = used.binary_search(&x).unwrap_err();
                used.insert(at, x);
            }
        }
    }
    if disjoint.len() >= r {
        let members = disjoint[..r].iter().map(|&pos| indices[pos]).collect();
        return Some((Vec::new(), members));
    }

    // Most frequent element among the distinct sets (smallest label wins
    // ties); recurse on its link.
    let mut counts: Vec<(u32, u32)> = Vec::new();
    for &pos in &kept {
        for &x in &sets[pos] {
            match counts.binary_search_by_key(&x, |&(e, _)| e) {
                Ok(i) => counts[i].1 += 1,
                Err(i) => counts.insert(i, (x, 1)),
            }
        }
    }
    let (best, best_count) =
        counts.iter().fold(
            (u32::MAX, 0u32),
            |(be, bc), &(e, c)| if c > bc { (e, c) } else { (be, bc) },
        );
    if best_count < 2 {
        return None;
    }
    let mut link_sets: Vec<Vec<u32>> = Vec::new();
    let mut link_indices: Vec<usize> = Vec::new();
    for &pos in &kept {
        if sets[pos].binary_search(&best).is_ok() {
            link_sets.push(sets[pos].iter().copied().filter(|&x| x != best).collect());
            link_indices.push(indices[pos]);
        }
    }
    let (mut core, members) = erdos_rado_rec(&link_sets, &link_indices, r)?;
    let at = core.binary_search(&best).unwrap_err();
    core.insert(at, best);
    Some((core, members))
}

/// Shrinks a vertex set until it spans exactly `target` edges, removing
/// isolated vertices freely and degree-1 vertices one edge at a time
/// (smallest label first), so the deficiency `|W| - e(W)` never grows.
pub fn trim_to_edges(
    host: &Hypergraph3,
    start: &VertexSubset,
    target: usize,
) -> Result<ConfigurationCertificate, String> {
    assert_eq!(start.ground_size(), host.num_vertices());
    let n = host.num_vertices();
    let mut in_w = start.clone();
    let mut inside: Vec<bool> = host
        .edges()
        .iter()
        .map(|e| e.iter().all(|&x| in_w.contains(x)))
        .collect();
    let mut e_cur = inside.iter().filter(|&&b| b).count();
    if e_cur < target {
        return Err(format!(
            "the set spans {} edges, below the target {}",
            e_cur, target
        ));
    }
    let mut deg = vec![0u32; n as usize];
    for (id, e) in host.edges().iter().enumerate() {
        if inside[id] {
            for &x in e {
                deg[x as usize] += 1;
            }
        }
    }
    loop {
        // Isolated members cost vertices without paying edges: drop them.
        let isolated: Vec<u32> = in_w.iter().filter(|&x| deg[x as usize] == 0).collect();
        for x in isolated {
            in_w.remove(x);
        }
        if e_cur == target {
            break;
        }
        let Some(x) = in_w.iter().find(|&x| deg[x as usize] == 1) else {
            return Err(format!(
                "stuck at {} edges (target {}): every remaining vertex has degree >= 2",
                e_cur, target
            ));
        };
        for &id in host.incident_edges(x) {
            if inside[id as usize] {
                inside[id as usize] = false;
                e_cur -= 1;
                for &y in &host.edge(id as usize) {
                    deg[y as usize] -= 1;
                }
            }
        }
        in_w.remove(x);
    }
    debug_assert_eq!(host.edges_inside(&in_w), target);
    Ok(ConfigurationCertificate::from_vertex_set(host, &in_w))
}

/// Converts a sunflower certificate into an `(e + Δ(F), e)`-configuration
/// certificate for `e = target`.
///
/// Requires the core to be at least as deficient as the pattern
/// (`Δ_F(U) >= Δ(F)`), each petal to carry at least one edge, and enough
/// petals to reach `target` edges. The union of the chosen petals is then
/// trimmed down to exactly `target` edges.
pub fn clean_sunflower(
    host: &Hypergraph3,
    cert: &SunflowerCertificate,
    target: usize,
) -> Result<ConfigurationCertificate, String> {
    cert.verify(host)?;
    let d = cert.pattern.deficiency();
    let d_core = cert.core_deficiency();
    if d_core < d {
        return Err(format!(
            "core deficiency {} is below the pattern deficiency {}",
            d_core, d
        ));
    }
    let e_f = cert.pattern.num_edges();
    let e_u = cert.pattern.edges_inside(&cert.core_subset());
    let e_p = e_f - e_u;
    if e_p == 0 {
        return Err(String::from("petals carry no edges"));
    }
    let need = target.saturating_sub(e_u);
    let p = need.div_ceil(e_p).max(1);
    if p > cert.r() {
        return Err(format!(
            "need {} petals to reach {} edges but the sunflower has {}",
            p,
            target,
            cert.r()
        ));
    }
    let union = cert.union_of_petals(host.num_vertices(), p);
    let result = trim_to_edges(host, &union, target)?;
    debug_assert!(result.deficiency() <= d);
    Ok(result)
}
