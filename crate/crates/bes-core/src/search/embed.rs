//! Class-restricted embedding enumeration.
//!
//! A scheme assigns every pattern vertex a sorted list of admissible host
//! vertices. The search branches on pattern vertices in ascending class-size
//! order and narrows candidates through the host's pair index as soon as an
//! edge has two placed endpoints.

use alloc::string::String;
use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;
use crate::subset::VertexSubset;

/// One candidate class per pattern vertex.
#[derive(Clone, Debug)]
pub struct PartitionScheme {
    classes: Vec<Vec<u32>>,
}

impl PartitionScheme {
    pub fn new(classes: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Self { classes }
    }

    /// Every one of the `k` pattern vertices may map anywhere in [0, n).
    pub fn unrestricted(k: u32, n: u32) -> Self {
        let all: Vec<u32> = (0..n).collect();
        Self {
            classes: alloc::vec![all; k as usize],
        }
    }

    pub fn num_classes(&self) -> u32 {
        self.classes.len() as u32
    }

    pub fn class(&self, i: u32) -> &[u32] {
        &self.classes[i as usize]
    }
}

/// Embeddings found before the cap, plus whether the cap cut the search off.
#[derive(Clone, Debug)]
pub struct EmbeddingList {
    pub embeddings: Vec<Vec<u32>>,
    pub truncated: bool,
}

struct EmbedState<'a> {
    host: &'a Hypergraph3,
    pattern: &'a Hypergraph3,
    scheme: &'a PartitionScheme,
    order: Vec<u32>,
    /// Pair constraints resolvable at each position: both other endpoints
    /// of the edge are already placed when the search reaches that slot.
    constraints: Vec<Vec<(u32, u32)>>,
    phi: Vec<u32>,
    used: Vec<bool>,
    limit: usize,
    out: Vec<Vec<u32>>,
    truncated: bool,
}

impl EmbedState<'_> {
    fn dfs(&mut self, p: usize) {
        if self.out.len() >= self.limit {
            self.truncated = true;
            return;
        }
        if p == self.order.len() {
            self.out.push(self.phi.clone());
            return;
        }
        let i = self.order[p];
        let class = self.scheme.class(i);
        let cons = core::mem::take(&mut self.constraints[p]);
        let candidates: Vec<u32> = match cons.first() {
            None => class
                .iter()
                .copied()
                .filter(|&c| !self.used[c as usize])
                .collect(),
            Some(&(a, b)) => {
                let (fa, fb) = (self.phi[a as usize], self.phi[b as usize]);
                let mut third: Vec<u32> = self
                    .host
                    .edges_with_pair(fa, fb)
                    .iter()
                    .map(|&id| {
                        let e = self.host.edge(id as usize);
                        e.into_iter().find(|&x| x != fa && x != fb).unwrap()
                    })
                    .collect();
                third.sort_unstable();
                third.retain(|&c| !self.used[c as usize] && class.binary_search(&c).is_ok());
                third
            }
        };
        'next: for c in candidates {
            for &(a, b) in cons.iter().skip(1) {
                let mut im = [self.phi[a as usize], self.phi[b as usize], c];
                im.sort_unstable();
                if self.host.edges().binary_search(&im).is_err() {
                    continue 'next;
                }
            }
            self.phi[i as usize] = c;
            self.used[c as usize] = true;
            self.dfs(p + 1);
            self.used[c as usize] = false;
            if self.truncated {
                break;
            }
        }
        self.constraints[p] = cons;
        let _ = self.pattern;
    }
}

/// Enumerates injective edge-preserving maps of `pattern` into `host` in
/// which vertex `i` lands inside class `i`. Deterministic; the output is in
/// ascending image order and stops at `limit` with the flag set.
pub fn enumerate_proper_embeddings(
    host: &Hypergraph3,
    pattern: &Hypergraph3,
    scheme: &PartitionScheme,
    limit: usize,
) -> EmbeddingList {
    let k = pattern.num_vertices();
    assert_eq!(scheme.num_classes(), k, "one class per pattern vertex");
    if limit == 0 {
        return EmbeddingList {
            embeddings: Vec::new(),
            truncated: true,
        };
    }

    let mut order: Vec<u32> = (0..k).collect();
    order.sort_by_key(|&i| (scheme.class(i).len(), i));
    let mut pos = alloc::vec![0usize; k as usize];
    for (p, &i) in order.iter().enumerate() {
        pos[i as usize] = p;
    }
    let mut constraints: Vec<Vec<(u32, u32)>> = alloc::vec![Vec::new(); k as usize];
    for e in pattern.edges() {
        let ps = [pos[e[0] as usize], pos[e[1] as usize], pos[e[2] as usize]];
        let last = ps.into_iter().max().unwrap();
        let others: Vec<u32> = (0..3).filter(|&j| ps[j] != last).map(|j| e[j]).collect();
        // A degenerate tie cannot happen: edge endpoints are distinct, so
        // their positions are distinct.
        constraints[last].push((others[0], others[1]));
    }

    let mut state = EmbedState {
        host,
        pattern,
        scheme,
        order,
        constraints,
        phi: alloc::vec![0u32; k as usize],
        used: alloc::vec![false; host.num_vertices() as usize],
        limit,
        out: Vec::new(),
        truncated: false,
    };
    state.dfs(0);
    let mut embeddings = state.out;
    embeddings.sort_unstable();
    EmbeddingList {
        embeddings,
        truncated: state.truncated,
    }
}

/// The agreement set {i : φ₁(i) = φ₂(i)} in pattern coordinates.
pub fn intersection_pattern(phi1: &[u32], phi2: &[u32]) -> Result<VertexSubset, String> {
    if phi1.len() != phi2.len() {
        return Err(String::from("embeddings of different patterns"));
    }
    let n = phi1.len() as u32;
    Ok(VertexSubset::from_iter_n(
        n,
        (0..n).filter(|&i| phi1[i as usize] == phi2[i as usize]),
    ))
}
