//! Certificate files.
//!
//! Certificates are JSON objects tagged by `type`. A configuration names
//! the vertex set it spans; a sunflower carries its pattern inline so the
//! claim can be checked against the host alone. Both record the SHA-256 of
//! the host file they were issued for, and `verify` refuses to check a
//! certificate against a different host.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use bes_core::certificate::ConfigurationCertificate;
use bes_core::hypergraph::Hypergraph3;
use bes_core::sunflower::SunflowerCertificate;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternJson {
    pub n: u32,
    pub edges: Vec<[u32; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CertJson {
    Configuration {
        host: String,
        host_sha256: String,
        vertices: Vec<u32>,
        v: u32,
        e: u32,
    },
    Sunflower {
        host: String,
        host_sha256: String,
        pattern: PatternJson,
        core: Vec<u32>,
        embeddings: Vec<Vec<u32>>,
    },
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn configuration_json(
    host_path: &str,
    host_bytes: &[u8],
    cert: &ConfigurationCertificate,
) -> CertJson {
    CertJson::Configuration {
        host: host_path.to_string(),
        host_sha256: sha256_hex(host_bytes),
        vertices: cert.vertices.clone(),
        v: cert.v,
        e: cert.e,
    }
}

/// Checks a parsed certificate against the host it names. The returned
/// string summarizes what was verified; errors describe the first failure.
pub fn verify_cert(
    cert: &CertJson,
    host_bytes: &[u8],
    host: &Hypergraph3,
) -> Result<String, String> {
    let actual = sha256_hex(host_bytes);
    let recorded = match cert {
        CertJson::Configuration { host_sha256, .. } => host_sha256,
        CertJson::Sunflower { host_sha256, .. } => host_sha256,
    };
    if *recorded != actual {
        return Err(format!(
            "certificate was issued for a different host (sha256 {recorded} != {actual})"
        ));
    }
    match cert {
        CertJson::Configuration { vertices, v, e, .. } => {
            let rebuilt = ConfigurationCertificate {
                vertices: vertices.clone(),
                v: *v,
                e: *e,
            };
            rebuilt.verify(host)?;
            Ok(format!(
                "configuration v={} e={} deficiency={}",
                rebuilt.v,
                rebuilt.e,
                rebuilt.deficiency()
            ))
        }
        CertJson::Sunflower {
            pattern,
            core,
            embeddings,
            ..
        } => {
            let graph = Hypergraph3::new(pattern.n, pattern.edges.iter().copied())
                .map_err(|e| format!("bad pattern: {e:?}"))?;
            let rebuilt = SunflowerCertificate {
                pattern: graph,
                core: core.clone(),
                embeddings: embeddings.clone(),
            };
            rebuilt.verify(host)?;
            Ok(format!(
                "sunflower r={} core={} deficiency={}",
                rebuilt.r(),
                rebuilt.core.len(),
                rebuilt.deficiency_value()
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bes_core::subset::VertexSubset;

    #[test]
    fn configuration_cert_round_trips_through_json() {
        let host = Hypergraph3::new(6, [[0, 1, 2], [1, 2, 3], [0, 2, 3]]).unwrap();
        let bytes = b"host file bytes";
        let set = VertexSubset::from_iter_n(6, [0u32, 1, 2, 3].into_iter());
        let cert = ConfigurationCertificate::from_vertex_set(&host, &set);
        let json = configuration_json("h.txt", bytes, &cert);
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: CertJson = serde_json::from_str(&text).unwrap();
        let summary = verify_cert(&parsed, bytes, &host).unwrap();
        assert!(summary.starts_with("configuration v=4 e=3"));
    }

    #[test]
    fn host_hash_mismatch_is_refused() {
        let host = Hypergraph3::new(6, [[0, 1, 2], [1, 2, 3], [0, 2, 3]]).unwrap();
        let set = VertexSubset::from_iter_n(6, [0u32, 1, 2, 3].into_iter());
        let cert = ConfigurationCertificate::from_vertex_set(&host, &set);
        let json = configuration_json("h.txt", b"original", &cert);
        let err = verify_cert(&json, b"tampered", &host).unwrap_err();
        assert!(err.contains("different host"));
    }

    #[test]
    fn sunflower_cert_round_trips_through_json() {
        use bes_core::construct::kst_plus_witness;
        use bes_core::sunflower::build_sunflower;
        let (kp, w) = kst_plus_witness(3, 4).unwrap();
        let mut core: Vec<u32> = w.a.to_vec();
        core.push(w.u);
        core.sort_unstable();
        let (host, maps) = build_sunflower(&kp.graph, &core, 3);
        let bytes = b"sunflower host";
        let json = CertJson::Sunflower {
            host: "h.txt".into(),
            host_sha256: sha256_hex(bytes),
            pattern: PatternJson {
                n: kp.graph.num_vertices(),
                edges: kp.graph.edges().to_vec(),
            },
            core: core.clone(),
            embeddings: maps.clone(),
        };
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: CertJson = serde_json::from_str(&text).unwrap();
        let summary = verify_cert(&parsed, bytes, &host).unwrap();
        assert!(summary.starts_with("sunflower r=3"), "{summary}");
        // A shrunken core no longer matches the pairwise agreements.
        let json_bad = CertJson::Sunflower {
            host: "h.txt".into(),
            host_sha256: sha256_hex(bytes),
            pattern: PatternJson {
                n: kp.graph.num_vertices(),
                edges: kp.graph.edges().to_vec(),
            },
            core: core[..core.len() - 1].to_vec(),
            embeddings: maps,
        };
        assert!(verify_cert(&json_bad, bytes, &host).is_err());
    }

    #[test]
    fn broken_claims_are_reported() {
        let host = Hypergraph3::new(6, [[0, 1, 2], [1, 2, 3], [0, 2, 3]]).unwrap();
        let bytes = b"host";
        let json = CertJson::Configuration {
            host: "h.txt".into(),
            host_sha256: sha256_hex(bytes),
            vertices: vec![0, 1, 2, 3],
            v: 4,
            e: 17,
        };
        assert!(verify_cert(&json, bytes, &host).is_err());
    }
}
