//! Canonical 3-uniform hypergraphs on dense vertex labels.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::subset::VertexSubset;

/// Validation failure when building a [`Hypergraph3`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    /// An edge mentions a label `>= n`.
    LabelOutOfRange { edge: [u32; 3], label: u32, n: u32 },
    /// An edge repeats a vertex.
    RepeatedVertex { edge: [u32; 3] },
    /// The same triple appears twice.
    DuplicateEdge { edge: [u32; 3] },
}

impl core::fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HypergraphError::LabelOutOfRange { edge, label, n } => write!(
                f,
                "edge {{{}, {}, {}}} uses label {} but the vertex range is 0..{}",
                edge[0], edge[1], edge[2], label, n
            ),
            HypergraphError::RepeatedVertex { edge } => write!(
                f,
                "edge {{{}, {}, {}}} repeats a vertex",
                edge[0], edge[1], edge[2]
            ),
            HypergraphError::DuplicateEdge { edge } => write!(
                f,
                "edge {{{}, {}, {}}} appears more than once",
                edge[0], edge[1], edge[2]
            ),
        }
    }
}

/// Degree statistics of a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max_degree: u32,
    /// Vertices contained in at least two edges.
    pub count_degree_ge2: u32,
    /// Vertices contained in exactly one edge.
    pub count_degree_eq1: u32,
    /// Vertices contained in no edge.
    pub count_isolated: u32,
}

/// An immutable 3-uniform hypergraph on vertex labels `0..n`.
///
/// Edges are stored canonically: each triple sorted ascending, the edge list
/// sorted lexicographically, duplicates rejected. Two hypergraphs compare
/// equal iff they have the same vertex count and the same edge list.
///
/// Pair and incidence indexes are built lazily on first use and shared for
/// the lifetime of the value.
pub struct Hypergraph3 {
    n: u32,
    edges: Vec<[u32; 3]>,
    incidence: OnceBox<IncidenceIndex>,
    pairs: OnceBox<PairIndex>,
}

impl Hypergraph3 {
    /// Builds a hypergraph from arbitrary (unordered, unsorted) triples.
    pub fn new(n: u32, edges: impl IntoIterator<Item = [u32; 3]>) -> Result<Self, HypergraphError> {
        let mut es: Vec<[u32; 3]> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(HypergraphError::RepeatedVertex { edge: e });
            }
            if e[2] >= n {
                return Err(HypergraphError::LabelOutOfRange {
                    edge: e,
                    label: e[2],
                    n,
                });
            }
            es.push(e);
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge { edge: w[0] });
            }
        }
        Ok(Hypergraph3 {
            n,
            edges: es,
            incidence: OnceBox::new(),
            pairs: OnceBox::new(),
        })
    }

    /// Number of vertices (the declared ground set size, isolated vertices
    /// included).
    pub fn num_vertices(&self) -> u32 {
        self.n
    }

    /// Number of edges.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[[u32; 3]] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> [u32; 3] {
        self.edges[id]
    }

    /// Deficiency `v - e`, counting all `n` declared vertices.
    pub fn deficiency(&self) -> i64 {
        self.n as i64 - self.edges.len() as i64
    }

    /// Number of edges with all three vertices inside `s`.
    pub fn edges_inside(&self, s: &VertexSubset) -> usize {
        debug_assert_eq!(s.ground_size(), self.n);
        self.edges
            .iter()
            .filter(|e| s.contains(e[0]) && s.contains(e[1]) && s.contains(e[2]))
            .count()
    }

    /// Induced deficiency `|s| - e(s)` of a vertex subset.
    pub fn induced_deficiency(&self, s: &VertexSubset) -> i64 {
        s.len() as i64 - self.edges_inside(s) as i64
    }

    pub fn degree(&self, v: u32) -> u32 {
        let idx = self.incidence_index();
        idx.offsets[v as usize + 1] - idx.offsets[v as usize]
    }

    /// Ids of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: u32) -> &[u32] {
        let idx = self.incidence_index();
        &idx.edge_ids[idx.offsets[v as usize] as usize..idx.offsets[v as usize + 1] as usize]
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let idx = self.incidence_index();
        let mut p = DegreeProfile {
            max_degree: 0,
            count_degree_ge2: 0,
            count_degree_eq1: 0,
            count_isolated: 0,
        };
        for v in 0..self.n as usize {
            let d = idx.offsets[v + 1] - idx.offsets[v];
            p.max_degree = p.max_degree.max(d);
            match d {
                0 => p.count_isolated += 1,
                1 => p.count_degree_eq1 += 1,
                _ => p.count_degree_ge2 += 1,
            }
        }
        p
    }

    /// Ids of the edges containing both `a` and `b`, ascending.
    pub fn edges_with_pair(&self, a: u32, b: u32) -> &[u32] {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let idx = self.pair_index();
        match idx.keys.binary_search(&(a, b)) {
            Ok(i) => &idx.edge_ids[idx.offsets[i] as usize..idx.offsets[i + 1] as usize],
            Err(_) => &[],
        }
    }

    pub fn pair_codegree(&self, a: u32, b: u32) -> usize {
        self.edges_with_pair(a, b).len()
    }

    /// Iterates over all covered pairs with their edge-id lists, in ascending
    /// pair order.
    pub fn pair_groups(&self) -> impl Iterator<Item = ((u32, u32), &[u32])> + '_ {
        let idx = self.pair_index();
        idx.keys.iter().enumerate().map(move |(i, &k)| {
            (
                k,
                &idx.edge_ids[idx.offsets[i] as usize..idx.offsets[i + 1] as usize],
            )
        })
    }

    /// True if every pair of vertices lies in at most one edge.
    pub fn is_linear(&self) -> bool {
        let idx = self.pair_index();
        idx.offsets.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Vertices that appear in at least one edge.
    pub fn used_vertices(&self) -> VertexSubset {
        let mut s = VertexSubset::empty(self.n);
        for e in &self.edges {
            s.insert(e[0]);
            s.insert(e[1]);
            s.insert(e[2]);
        }
        s
    }

    /// Restriction to a subset of edge ids, with vertices renamed densely.
    ///
    /// Vertices keep their relative order. Returns the renamed hypergraph and
    /// the map from new label to old label.
    pub fn subhypergraph_renamed(&self, edge_ids: &[u32]) -> (Hypergraph3, Vec<u32>) {
        let mut used = VertexSubset::empty(self.n);
        for &id in edge_ids {
            let e = self.edges[id as usize];
            used.insert(e[0]);
            used.insert(e[1]);
            used.insert(e[2]);
        }
        let old_of_new = used.to_vec();
        let mut new_of_old = vec![u32::MAX; self.n as usize];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old as usize] = new as u32;
        }
        let edges = edge_ids.iter().map(|&id| {
            let e = self.edges[id as usize];
            [
                new_of_old[e[0] as usize],
                new_of_old[e[1] as usize],
                new_of_old[e[2] as usize],
            ]
        });
        let sub = Hypergraph3::new(old_of_new.len() as u32, edges)
            .expect("edge subset of a valid hypergraph stays valid");
        (sub, old_of_new)
    }

    fn incidence_index(&self) -> &IncidenceIndex {
        self.incidence
            .get_or_init(|| Box::new(IncidenceIndex::build(self.n, &self.edges)))
    }

    fn pair_index(&self) -> &PairIndex {
        self.pairs
            .get_or_init(|| Box::new(PairIndex::build(&self.edges)))
    }
}

impl Clone for Hypergraph3 {
    fn clone(&self) -> Self {
        Hypergraph3 {
            n: self.n,
            edges: self.edges.clone(),
            incidence: OnceBox::new(),
            pairs: OnceBox::new(),
        }
    }
}

impl PartialEq for Hypergraph3 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph3 {}

impl core::hash::Hash for Hypergraph3 {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl core::fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "Hypergraph3(n={}, m={}, edges=",
            self.n,
            self.edges.len()
        )?;
        f.debug_list()
            .entries(self.edges.iter().map(|e| (e[0], e[1], e[2])))
            .finish()?;
        write!(f, ")")
    }
}

struct IncidenceIndex {
    offsets: Vec<u32>,
    edge_ids: Vec<u32>,
}

impl IncidenceIndex {
    fn build(n: u32, edges: &[[u32; 3]]) -> Self {
        let mut offsets = vec![0u32; n as usize + 1];
        for e in edges {
            for &v in e {
                offsets[v as usize + 1] += 1;
            }
        }
        for i in 0..n as usize {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut edge_ids = vec![0u32; edges.len() * 3];
        for (id, e) in edges.iter().enumerate() {
            for &v in e {
                edge_ids[cursor[v as usize] as usize] = id as u32;
                cursor[v as usize] += 1;
            }
        }
        IncidenceIndex { offsets, edge_ids }
    }
}

struct PairIndex {
    keys: Vec<(u32, u32)>,
    offsets: Vec<u32>,
    edge_ids: Vec<u32>,
}

impl PairIndex {
    fn build(edges: &[[u32; 3]]) -> Self {
        let mut entries: Vec<((u32, u32), u32)> = Vec::with_capacity(edges.len() * 3);
        for (id, e) in edges.iter().enumerate() {
            entries.push(((e[0], e[1]), id as u32));
            entries.push(((e[0], e[2]), id as u32));
            entries.push(((e[1], e[2]), id as u32));
        }
        entries.sort_unstable();
        let mut keys = Vec::new();
        let mut offsets: Vec<u32> = Vec::new();
        let mut edge_ids = Vec::with_capacity(entries.len());
        for (key, id) in entries {
            if keys.last() != Some(&key) {
                keys.push(key);
                offsets.push(edge_ids.len() as u32);
            }
            edge_ids.push(id);
        }
        offsets.push(edge_ids.len() as u32);
        PairIndex {
            keys,
            offsets,
            edge_ids,
        }
    }
}
