//! The `search` subcommand.
//!
//! Three modes share one flag surface. `bes` runs the staged driver for
//! `--e` edges and prints a configuration certificate. `oracle` decides
//! `--e` edges on at most `--v` vertices exactly. `embed` enumerates copies
//! of `--pattern` up to `--limit`. Results go to stdout as JSON; the trace
//! goes to stderr and, with `--trace`, to a file.

use std::path::{Path, PathBuf};

use serde::Serialize;

use bes_core::certificate::ConfigurationCertificate;
use bes_core::search::{
    find_bes, DriverError, OracleLimits, OracleOutcome, PartitionScheme, SearchConfig,
};
use bes_core::subset::VertexSubset;
use bes_core::trace::TraceSink;

use crate::certs::{configuration_json, sha256_hex};
use crate::exit::{input_error, CliResult, Failure};
use crate::format::{parse_host, HostFile};
use crate::parallel::{embed_split, oracle_split, Deadline, EmbedSplit};
use crate::trace::JsonTrace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Staged driver: linear reduction, rainbow seeding, gluing, cleaning.
    Bes,
    /// Exact decision by exhaustive rooted search.
    Oracle,
    /// Enumerate embeddings of `--pattern` into the host.
    Embed,
}

pub struct SearchArgs {
    pub pattern: Option<PathBuf>,
    pub host: PathBuf,
    pub e: Option<usize>,
    pub v: Option<usize>,
    pub mode: Mode,
    pub budget_ms: Option<u64>,
    pub limit: usize,
    pub sides: (Option<u32>, Option<u32>),
    pub seed: u64,
    pub threads: usize,
    pub trace: Option<PathBuf>,
}

#[derive(Serialize)]
struct EmbeddingsJson {
    r#type: &'static str,
    host: String,
    host_sha256: String,
    pattern: String,
    count: usize,
    truncated: bool,
    embeddings: Vec<Vec<u32>>,
}

fn load_host(path: &Path) -> Result<(Vec<u8>, HostFile), Failure> {
    let bytes = std::fs::read(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| input_error(format!("{}: not utf-8 text", path.display())))?;
    let host = parse_host(text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    Ok((bytes, host))
}

fn open_trace(args: &SearchArgs) -> Result<JsonTrace, Failure> {
    let file = match &args.trace {
        None => None,
        Some(path) => Some(
            std::fs::File::create(path)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?,
        ),
    };
    Ok(JsonTrace::new(true, file))
}

pub fn search(args: SearchArgs) -> CliResult {
    let (host_bytes, host) = load_host(&args.host)?;
    let host_path = args.host.display().to_string();
    let mut trace = open_trace(&args)?;
    trace.event("run_start", "search", &format!("mode {:?}", args.mode));

    match args.mode {
        Mode::Bes => {
            let target = args
                .e
                .ok_or_else(|| input_error("--e is required in bes mode"))?;
            if args.budget_ms.is_some() {
                trace.note("search", "budget-ms has no effect in bes mode");
            }
            let seed_sides = match args.sides {
                (Some(s), Some(t)) => Some((s, t)),
                (None, None) => None,
                _ => return Err(input_error("--s and --t go together")),
            };
            let cfg = SearchConfig {
                seed: args.seed,
                seed_sides,
                ..SearchConfig::default()
            };
            match find_bes(&host.graph, target, &cfg, &mut trace) {
                Ok(cert) => {
                    if let Some(vcap) = args.v {
                        if cert.v as usize > vcap {
                            trace.event("run_end", "search", "over the vertex bound");
                            return Err(Failure::Exhausted(format!(
                                "certificate spans {} vertices, over the --v bound {vcap}",
                                cert.v
                            )));
                        }
                    }
                    emit_configuration(&host_path, &host_bytes, &cert)?;
                    trace.event("run_end", "search", "found");
                    Ok(())
                }
                Err(DriverError::BadInput(msg)) => {
                    trace.event("run_end", "search", "bad input");
                    Err(input_error(msg))
                }
                Err(DriverError::Exhausted { stage, detail }) => {
                    trace.event("run_end", "search", &format!("exhausted at {stage}"));
                    Err(Failure::Exhausted(format!(
                        "exhausted at {stage}: {detail}"
                    )))
                }
            }
        }
        Mode::Oracle => {
            let e = args
                .e
                .ok_or_else(|| input_error("--e is required in oracle mode"))?;
            let v = args
                .v
                .ok_or_else(|| input_error("--v is required in oracle mode"))?;
            if e < 1 {
                return Err(input_error("--e must be at least 1"));
            }
            let deadline = Deadline::after_ms(args.budget_ms);
            let limits = OracleLimits::default();
            let outcome = oracle_split(&host.graph, e, v, &limits, args.threads, &deadline);
            match outcome {
                OracleOutcome::Found { edge_ids } => {
                    let mut labels: Vec<u32> = edge_ids
                        .iter()
                        .flat_map(|&id| host.graph.edge(id as usize))
                        .collect();
                    labels.sort_unstable();
                    labels.dedup();
                    let set =
                        VertexSubset::from_iter_n(host.graph.num_vertices(), labels.into_iter());
                    let cert = ConfigurationCertificate::from_vertex_set(&host.graph, &set);
                    cert.verify(&host.graph).map_err(Failure::Internal)?;
                    emit_configuration(&host_path, &host_bytes, &cert)?;
                    trace.event("run_end", "oracle", "found");
                    Ok(())
                }
                OracleOutcome::ExhaustedNone { nodes } => {
                    trace.event(
                        "run_end",
                        "oracle",
                        &format!("exhausted after {nodes} nodes"),
                    );
                    Err(Failure::Exhausted(format!(
                        "no {e} edges on at most {v} vertices"
                    )))
                }
                OracleOutcome::Stopped { nodes } => {
                    trace.event("run_end", "oracle", &format!("stopped after {nodes} nodes"));
                    Err(Failure::Timeout(String::from("budget ran out")))
                }
            }
        }
        Mode::Embed => {
            let pattern_path = args
                .pattern
                .as_ref()
                .ok_or_else(|| input_error("--pattern is required in embed mode"))?;
            let (_, pattern) = load_host(pattern_path)?;
            let k = pattern.graph.num_vertices();
            if k < 1 {
                return Err(input_error("pattern has no vertices"));
            }
            if args.limit < 1 {
                return Err(input_error("--limit must be at least 1"));
            }
            let scheme = PartitionScheme::unrestricted(k, host.graph.num_vertices());
            let deadline = Deadline::after_ms(args.budget_ms);
            match embed_split(
                &host.graph,
                &pattern.graph,
                &scheme,
                args.limit,
                args.threads,
                &deadline,
            ) {
                EmbedSplit::Timeout => {
                    trace.event("run_end", "embed", "stopped");
                    Err(Failure::Timeout(String::from("budget ran out")))
                }
                EmbedSplit::Done(list) if list.embeddings.is_empty() => {
                    trace.event("run_end", "embed", "exhausted");
                    Err(Failure::Exhausted(String::from("pattern does not embed")))
                }
                EmbedSplit::Done(list) => {
                    let json = EmbeddingsJson {
                        r#type: "embeddings",
                        host: host_path,
                        host_sha256: sha256_hex(&host_bytes),
                        pattern: pattern_path.display().to_string(),
                        count: list.embeddings.len(),
                        truncated: list.truncated,
                        embeddings: list.embeddings,
                    };
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json).expect("serializable")
                    );
                    trace.event("run_end", "embed", "found");
                    Ok(())
                }
            }
        }
    }
}

fn emit_configuration(
    host_path: &str,
    host_bytes: &[u8],
    cert: &ConfigurationCertificate,
) -> CliResult {
    let json = configuration_json(host_path, host_bytes, cert);
    println!(
        "{}",
        serde_json::to_string_pretty(&json).expect("serializable")
    );
    Ok(())
}
