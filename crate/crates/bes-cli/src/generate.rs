//! The `generate` subcommand: emit host hypergraphs for experiments.

use bes_core::lowerbounds::{behrend_set, planted_host, random_linear_host, rs_hypergraph};
use bes_core::search::driver::default_sides;

use crate::exit::{input_error, CliResult, Failure};
use crate::format::serialize_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    /// Tripartite host from a progression-free difference set; has no
    /// (6, 3)-configuration.
    Rs,
    /// Uniform random linear host; `--density` scales edges per vertex.
    RandomLinear,
    /// Linear host hiding one gluable configuration for a target of `--n`
    /// edges; `--density` scales the count of camouflage edges.
    Planted,
}

pub fn generate(
    kind: Kind,
    n: Option<u32>,
    density: f64,
    s: Option<u32>,
    t: Option<u32>,
    seed: u64,
) -> CliResult {
    let n = n.ok_or_else(|| input_error("--n is required"))?;
    if !(density > 0.0) {
        return Err(input_error("--density must be positive"));
    }
    let graph = match kind {
        Kind::Rs => {
            if n < 1 {
                return Err(input_error("--n must be at least 1"));
            }
            let b = behrend_set(n);
            rs_hypergraph(n, &b).map_err(Failure::Input)?
        }
        Kind::RandomLinear => {
            if n < 3 {
                return Err(input_error("--n must be at least 3"));
            }
            let m = (density * n as f64).round() as usize;
            let cap = (n as usize) * (n as usize - 1) / 8;
            if m > cap {
                return Err(input_error(format!(
                    "{m} edges is too dense for a linear host on {n} vertices (cap {cap})"
                )));
            }
            random_linear_host(n, m.max(1), seed)
        }
        Kind::Planted => {
            let target = n as usize;
            if target < 1 {
                return Err(input_error("--n must be at least 1"));
            }
            let (s, t) = match (s, t) {
                (Some(s), Some(t)) => (s, t),
                (None, None) => default_sides(target),
                _ => return Err(input_error("--s and --t go together")),
            };
            let st = (s as usize) * (t as usize);
            if st < target {
                if target >= 4 * st {
                    return Err(input_error(format!(
                        "target {target} needs more than one gluing stage over sides ({s}, {t})"
                    )));
                }
                let tree_pair = s >= 3 && t >= 3 && st >= 2 * (s as usize + t as usize - 1);
                if !tree_pair {
                    return Err(input_error(format!(
                        "sides ({s}, {t}) admit no spanning tree pair, so nothing can be planted"
                    )));
                }
            } else if s < 1 || t < 1 {
                return Err(input_error("side lengths must be positive"));
            }
            let noise = (density * target as f64).round() as usize;
            planted_host(target, s, t, noise, seed)
        }
    };
    print!("{}", serialize_graph(&graph));
    Ok(())
}
