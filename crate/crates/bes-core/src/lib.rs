//! Constructive machinery for Brown-Erdos-Sos configuration search in
//! 3-uniform hypergraphs.
//!
//! The crate is organized around a small set of objects:
//!
//! * [`Hypergraph3`]: an immutable, canonically ordered 3-uniform hypergraph
//!   on dense vertex labels `0..n`, with lazily built pair and incidence
//!   indexes.
//! * `structure`: deficiency-based structure analysis, good sets, the
//!   eligibility conditions used by the gluing pipeline, and exhaustive
//!   oracles that cross-check every pruned search.
//! * `construct`: explicit constructions, edge-disjoint spanning-tree pairs
//!   of `K_{s,t}`, the apex extension `K_{s,t}^+`, gluing along a good set,
//!   and the doubling tower built from repeated gluing.
//! * `sunflower`: sunflower certificates over a host hypergraph, the cleaning
//!   step that converts a wide sunflower into a dense configuration, and
//!   degree-1 trimming.
//! * `search`: the search engine, linearization, tripartition, rainbow
//!   `K_{s,t}` seeding, partition-respecting embedding enumeration, sunflower
//!   extraction, the iteration step, exact brute-force configuration oracles,
//!   and the end-to-end driver.
//! * `lowerbounds`: dense (6,3)-free constructions (Behrend progression-free
//!   sets and the arithmetic triple hypergraph built from them) plus seeded
//!   generators for adversarial and planted test inputs.
//!
//! Everything in this crate is deterministic: randomized routines take an
//! explicit seed and use a fixed, portable stream cipher generator, and every
//! "first found" result is defined by a canonical enumeration order.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `bes-cli` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod certificate;
pub mod construct;
pub mod hypergraph;
pub mod lowerbounds;
pub mod rng;
pub mod search;
pub mod structure;
pub mod subset;
pub mod sunflower;
pub mod trace;

pub use certificate::ConfigurationCertificate;
pub use hypergraph::{DegreeProfile, Hypergraph3, HypergraphError};
pub use structure::{EligibilityReport, EligibilityWitness, GoodSetVerdict};
pub use subset::VertexSubset;
