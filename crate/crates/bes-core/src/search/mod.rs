//! The configuration search engine.
//!
//! `linear` thins a host down to a linear subhypergraph, `partition` colors
//! its vertices, `rainbow` digs a complete bipartite pattern with all-distinct
//! link colors out of one tripartition, `iterate` doubles pattern density by
//! gluing or extracts a sunflower when gluing stalls, and `driver` strings
//! those stages together into `find_bes`. `oracle` is the independent
//! exhaustive search used to cross-check everything else.

pub mod driver;
pub mod embed;
pub mod iterate;
pub mod linear;
pub mod oracle;
pub mod partition;
pub mod rainbow;

pub use driver::{find_bes, DriverError, SearchConfig};
pub use embed::{
    enumerate_proper_embeddings, intersection_pattern, EmbeddingList, PartitionScheme,
};
pub use iterate::{iteration_step, verify_embedding, IterationOutcome};
pub use linear::{reduce_to_linear, LinearReduction};
pub use oracle::{
    exists_configuration, exists_configuration_rooted, exists_configuration_unpruned, NeverStop,
    OracleLimits, OracleOutcome, StopCheck,
};
