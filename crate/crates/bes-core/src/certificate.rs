//! Configuration certificates.
//!
//! A certificate names a vertex set of a host hypergraph and claims it spans
//! at least `e` edges on `v` vertices. Verification recounts against the
//! host, so a certificate is self-contained evidence that the host holds an
//! `(v, e)`-configuration (and hence an `(e + k, e)` one for `k = v - e`).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::hypergraph::Hypergraph3;
use crate::subset::VertexSubset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationCertificate {
    /// Host vertex labels, strictly ascending.
    pub vertices: Vec<u32>,
    /// Claimed vertex count; must equal `vertices.len()`.
    pub v: u32,
    /// Claimed edge count: the host must have at least this many edges
    /// entirely inside `vertices`.
    pub e: u32,
}

impl ConfigurationCertificate {
    /// Builds a certificate from a vertex set by counting induced edges.
    pub fn from_vertex_set(host: &Hypergraph3, set: &VertexSubset) -> Self {
        ConfigurationCertificate {
            vertices: set.to_vec(),
            v: set.len(),
            e: host.edges_inside(set) as u32,
        }
    }

    /// Claimed deficiency `v - e`.
    pub fn deficiency(&self) -> i64 {
        self.v as i64 - self.e as i64
    }

    pub fn to_subset(&self, n: u32) -> VertexSubset {
        VertexSubset::from_iter_n(n, self.vertices.iter().copied())
    }

    /// Recounts the certificate against a host.
    pub fn verify(&self, host: &Hypergraph3) -> Result<(), String> {
        if self.v as usize != self.vertices.len() {
            return Err(format!(
                "vertex count {} does not match the {} listed vertices",
                self.v,
                self.vertices.len()
            ));
        }
        for w in self.vertices.windows(2) {
            if w[0] >= w[1] {
                return Err(String::from("vertex list is not strictly ascending"));
            }
        }
        if let Some(&last) = self.vertices.last() {
            if last >= host.num_vertices() {
                return Err(format!(
                    "vertex {} out of host range 0..{}",
                    last,
                    host.num_vertices()
                ));
            }
        }
        let set = self.to_subset(host.num_vertices());
        let inside = host.edges_inside(&set);
        if inside < self.e as usize {
            return Err(format!(
                "host has only {} edges inside the set, {} claimed",
                inside, self.e
            ));
        }
        Ok(())
    }
}
