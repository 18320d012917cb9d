//! End-to-end configuration search.
//!
//! `find_bes` looks for `target` edges of the host spanning few vertices:
//! at most `target + log2(target) + 38`. The route is fixed up front from
//! the seed side lengths: if `s*t >= target` a single rainbow pattern copy
//! is trimmed down, otherwise pair-gluing doubles the pattern until a final
//! 2- or 4-fold glue overshoots the target and the result is trimmed. Any
//! sunflower that falls out of a stalled gluing step is cleaned into a
//! configuration directly, which ends the search just as well.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::certificate::ConfigurationCertificate;
use crate::construct::{kst_plus, kst_plus_witness};
use crate::hypergraph::Hypergraph3;
use crate::search::iterate::{iteration_step, verify_embedding, IterationOutcome};
use crate::search::linear::{reduce_to_linear, LinearReduction};
use crate::search::partition::{ranked_trials, tripartition, MIN_PARTITION_VERTICES};
use crate::search::rainbow::{build_link, rainbow_ksts};
use crate::structure::EligibilityWitness;
use crate::subset::VertexSubset;
use crate::sunflower::{clean_sunflower, trim_to_edges};
use crate::trace::TraceSink;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    /// Side lengths of the seed pattern; `None` picks them from the target.
    pub seed_sides: Option<(u32, u32)>,
    pub partition_trials: u32,
    /// Most rainbow copies collected per partition and role assignment.
    pub copy_cap: usize,
    /// Search nodes allowed inside one rainbow extraction.
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0xbe5,
            seed_sides: None,
            partition_trials: 8,
            copy_cap: 64,
            node_budget: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DriverError {
    BadInput(String),
    Exhausted { stage: String, detail: String },
}

impl core::fmt::Display for DriverError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DriverError::BadInput(msg) => write!(f, "bad input: {msg}"),
            DriverError::Exhausted { stage, detail } => {
                write!(f, "search exhausted at {stage}: {detail}")
            }
        }
    }
}

/// Largest admissible deficiency of the certificate for a given target.
pub fn deficiency_budget(target: usize) -> i64 {
    target.ilog2() as i64 + 38
}

/// Seed sides used when the caller does not pin them: the smallest square
/// at least the target, switching to 16x16 for large targets so the
/// pattern stops growing with the host.
pub fn default_sides(target: usize) -> (u32, u32) {
    if target >= 512 {
        return (16, 16);
    }
    let mut r = 1u32;
    while (r as usize) * (r as usize) < target {
        r += 1;
    }
    (r, r)
}

enum Plan {
    Direct,
    Tower { levels: u32, m_final: u32 },
}

const ROLE_PERMS: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub fn find_bes(
    host: &Hypergraph3,
    target: usize,
    cfg: &SearchConfig,
    trace: &mut dyn TraceSink,
) -> Result<ConfigurationCertificate, DriverError> {
    if target < 1 {
        return Err(DriverError::BadInput(String::from(
            "target must be positive",
        )));
    }
    let (s, t) = cfg.seed_sides.unwrap_or_else(|| default_sides(target));
    if s < 1 || t < 1 {
        return Err(DriverError::BadInput(String::from(
            "seed sides must be positive",
        )));
    }
    let st = (s as usize) * (t as usize);
    let plan = if st >= target {
        Plan::Direct
    } else {
        let q = target / st;
        let levels = q.ilog2().saturating_sub(1);
        let e_top = st << levels;
        let m_final = if 2 * e_top >= target { 2 } else { 4 };
        Plan::Tower { levels, m_final }
    };
    let bound = deficiency_budget(target);
    let plan_deficiency = match plan {
        Plan::Direct => (s + t) as i64,
        Plan::Tower { levels, m_final } => (s + t + levels + m_final - 1) as i64,
    };
    if plan_deficiency > bound {
        return Err(DriverError::BadInput(format!(
            "seed sides ({s}, {t}) cannot reach deficiency {bound} for target {target}"
        )));
    }
    let witness = match plan {
        Plan::Direct => None,
        Plan::Tower { .. } => match kst_plus_witness(s, t) {
            Some((_, w)) => Some(w),
            None => {
                return Err(DriverError::BadInput(format!(
                    "sides ({s}, {t}) admit no spanning tree pair, so gluing cannot start"
                )))
            }
        },
    };
    if host.num_vertices() < MIN_PARTITION_VERTICES {
        return Err(DriverError::BadInput(format!(
            "host has {} vertices, need at least {MIN_PARTITION_VERTICES}",
            host.num_vertices()
        )));
    }
    if host.num_edges() < target {
        return Err(DriverError::Exhausted {
            stage: String::from("input"),
            detail: format!(
                "host has {} edges, below the target {target}",
                host.num_edges()
            ),
        });
    }

    trace.stage_start("reduce");
    let lin = match reduce_to_linear(host, target) {
        LinearReduction::DensePair(cert) => {
            cert.verify(host).expect("dense pair certificate");
            trace.stage_end("reduce", "dense pair");
            return Ok(cert);
        }
        LinearReduction::Reduced { graph, .. } => graph,
    };
    trace.stage_end("reduce", "linear");
    if lin.num_edges() < target {
        return Err(DriverError::Exhausted {
            stage: String::from("reduce"),
            detail: format!(
                "linear part keeps {} edges, below the target {target}",
                lin.num_edges()
            ),
        });
    }

    trace.stage_start("partition");
    let ranked = ranked_trials(&lin, cfg.seed, cfg.partition_trials);
    trace.stage_end("partition", "ranked");

    let mut last_detail = String::from("no partition trial produced a rainbow pattern");
    for &(trial, score) in &ranked {
        if score < st {
            continue;
        }
        let part = tripartition(lin.num_vertices(), cfg.seed, trial);
        for roles in ROLE_PERMS {
            let link = build_link(&lin, &part, roles);
            let copies = rainbow_ksts(&link, s, t, cfg.copy_cap, cfg.node_budget);
            if copies.is_empty() {
                continue;
            }
            let pattern0 = kst_plus(s, t).graph;
            let phis: Vec<Vec<u32>> = copies.iter().map(|c| c.to_embedding()).collect();
            for phi in &phis {
                verify_embedding(&pattern0, phi, &lin).expect("lifted rainbow copy");
            }
            trace.note("rainbow", "copies found");
            match attempt(&lin, target, &plan, pattern0, witness.as_ref(), phis, trace) {
                Ok(cert) => {
                    cert.verify(host).expect("final certificate");
                    assert_eq!(cert.e as usize, target);
                    assert!(cert.deficiency() <= bound, "deficiency budget exceeded");
                    return Ok(cert);
                }
                Err(detail) => last_detail = detail,
            }
        }
    }
    Err(DriverError::Exhausted {
        stage: String::from("search"),
        detail: last_detail,
    })
}

fn image_subset(n: u32, phi: &[u32]) -> VertexSubset {
    VertexSubset::from_iter_n(n, phi.iter().copied())
}

fn attempt(
    lin: &Hypergraph3,
    target: usize,
    plan: &Plan,
    pattern0: Hypergraph3,
    witness: Option<&EligibilityWitness>,
    phis: Vec<Vec<u32>>,
    trace: &mut dyn TraceSink,
) -> Result<ConfigurationCertificate, String> {
    match *plan {
        Plan::Direct => {
            trace.stage_start("trim");
            let start = image_subset(lin.num_vertices(), &phis[0]);
            let cert = trim_to_edges(lin, &start, target)?;
            trace.stage_end("trim", "direct");
            Ok(cert)
        }
        Plan::Tower { levels, m_final } => {
            let mut pattern = pattern0;
            let mut w = witness.expect("tower plan carries a witness").clone();
            let mut phis = phis;
            for level in 0..levels {
                trace.stage_start("iterate");
                match iteration_step(lin, &pattern, &w, &phis, 2, trace) {
                    IterationOutcome::Glued {
                        pattern: p,
                        witness: tw,
                        embeddings,
                    } => {
                        pattern = p;
                        w = tw.expect("pair gluing transports the witness");
                        phis = embeddings;
                        trace.stage_end("iterate", "glued");
                    }
                    IterationOutcome::Sunflower(cert) => {
                        trace.stage_end("iterate", "sunflower");
                        return clean_sunflower(lin, &cert, target);
                    }
                    IterationOutcome::Exhausted { bucket_sizes } => {
                        return Err(format!(
                            "gluing level {level} exhausted over {} buckets",
                            bucket_sizes.len()
                        ));
                    }
                }
            }
            trace.stage_start("iterate");
            match iteration_step(lin, &pattern, &w, &phis, m_final, trace) {
                IterationOutcome::Glued { embeddings, .. } => {
                    trace.stage_end("iterate", "glued final");
                    let start = image_subset(lin.num_vertices(), &embeddings[0]);
                    trim_to_edges(lin, &start, target)
                }
                IterationOutcome::Sunflower(cert) => {
                    trace.stage_end("iterate", "sunflower");
                    clean_sunflower(lin, &cert, target)
                }
                IterationOutcome::Exhausted { bucket_sizes } => Err(format!(
                    "final {m_final}-fold gluing exhausted over {} buckets",
                    bucket_sizes.len()
                )),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_and_default_sides() {
        assert_eq!(deficiency_budget(12), 3 + 38);
        assert_eq!(deficiency_budget(48), 5 + 38);
        assert_eq!(default_sides(12), (4, 4));
        assert_eq!(default_sides(48), (7, 7));
        assert_eq!(default_sides(600), (16, 16));
    }

    #[test]
    fn rejects_tiny_hosts() {
        let h = Hypergraph3::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let err = find_bes(
            &h,
            2,
            &SearchConfig::default(),
            &mut crate::trace::NullTrace,
        );
        assert!(matches!(err, Err(DriverError::BadInput(_))));
    }

    #[test]
    fn pigeonhole_exhaustion() {
        let h = Hypergraph3::new(20, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let err = find_bes(
            &h,
            5,
            &SearchConfig::default(),
            &mut crate::trace::NullTrace,
        );
        assert!(matches!(err, Err(DriverError::Exhausted { .. })));
    }

    #[test]
    fn dense_pair_short_circuit() {
        let edges: Vec<[u32; 3]> = (0..6).map(|i| [0, 1, 2 + i]).collect();
        let h = Hypergraph3::new(16, edges).unwrap();
        let cert = find_bes(
            &h,
            5,
            &SearchConfig::default(),
            &mut crate::trace::NullTrace,
        )
        .expect("dense pair present");
        assert_eq!(cert.e, 5);
        assert_eq!(cert.deficiency(), 2);
    }
}
