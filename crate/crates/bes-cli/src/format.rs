//! The plain-text hypergraph format.
//!
//! A file is `#`-comment lines, then a `h3 <n> <m>` header, then exactly
//! `m` edge lines of three ascending vertex labels, then at most one
//! `witness` trailer naming an eligibility witness. Serialization always
//! writes the canonical form: no comments, edges in lexicographic order,
//! one trailing newline per line. Parsing a canonical file and serializing
//! the result reproduces the input byte for byte.

use std::fmt;

use bes_core::hypergraph::Hypergraph3;
use bes_core::structure::EligibilityWitness;
use bes_core::subset::VertexSubset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatErrorKind {
    MissingHeader,
    BadHeader,
    BadTriple,
    TripleNotSorted,
    LabelOutOfRange,
    DuplicateEdge,
    MissingEdges,
    BadWitness,
    TrailingContent,
}

impl FormatErrorKind {
    pub fn code(&self) -> &'static str {
        match self {
            FormatErrorKind::MissingHeader => "missing-header",
            FormatErrorKind::BadHeader => "bad-header",
            FormatErrorKind::BadTriple => "bad-triple",
            FormatErrorKind::TripleNotSorted => "triple-not-sorted",
            FormatErrorKind::LabelOutOfRange => "label-out-of-range",
            FormatErrorKind::DuplicateEdge => "duplicate-edge",
            FormatErrorKind::MissingEdges => "missing-edges",
            FormatErrorKind::BadWitness => "bad-witness",
            FormatErrorKind::TrailingContent => "trailing-content",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
    pub detail: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}: {} ({})",
            self.line,
            self.detail,
            self.kind.code()
        )
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, kind: FormatErrorKind, detail: impl Into<String>) -> FormatError {
    FormatError {
        line,
        kind,
        detail: detail.into(),
    }
}

/// A parsed hypergraph plus its optional witness trailer.
#[derive(Debug, Clone)]
pub struct HostFile {
    pub graph: Hypergraph3,
    pub witness: Option<EligibilityWitness>,
}

fn parse_labels(s: &str) -> Option<Vec<u32>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|p| p.parse().ok()).collect()
}

fn parse_witness_line(line: &str, no: usize, n: u32) -> Result<EligibilityWitness, FormatError> {
    let mut a = None;
    let mut b = None;
    let mut u = None;
    let mut v = None;
    for field in line.split_whitespace().skip(1) {
        let Some((key, value)) = field.split_once('=') else {
            return Err(err(
                no,
                FormatErrorKind::BadWitness,
                format!("field `{field}` lacks `=`"),
            ));
        };
        match key {
            "A" | "B" => {
                let Some(labels) = parse_labels(value) else {
                    return Err(err(
                        no,
                        FormatErrorKind::BadWitness,
                        format!("bad label list `{value}`"),
                    ));
                };
                if labels.iter().any(|&x| x >= n) {
                    return Err(err(
                        no,
                        FormatErrorKind::BadWitness,
                        format!("{key} leaves the vertex range"),
                    ));
                }
                let set = VertexSubset::from_iter_n(n, labels.into_iter());
                if key == "A" {
                    a = Some(set);
                } else {
                    b = Some(set);
                }
            }
            "u" | "v" => {
                let Ok(x) = value.parse::<u32>() else {
                    return Err(err(
                        no,
                        FormatErrorKind::BadWitness,
                        format!("bad vertex `{value}`"),
                    ));
                };
                if x >= n {
                    return Err(err(
                        no,
                        FormatErrorKind::BadWitness,
                        format!("{key} leaves the vertex range"),
                    ));
                }
                if key == "u" {
                    u = Some(x);
                } else {
                    v = Some(x);
                }
            }
            other => {
                return Err(err(
                    no,
                    FormatErrorKind::BadWitness,
                    format!("unknown field `{other}`"),
                ));
            }
        }
    }
    match (a, b, u, v) {
        (Some(a), Some(b), Some(u), Some(v)) => Ok(EligibilityWitness { a, b, u, v }),
        _ => Err(err(
            no,
            FormatErrorKind::BadWitness,
            "witness needs A, B, u and v",
        )),
    }
}

pub fn parse_host(text: &str) -> Result<HostFile, FormatError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            None => return Err(err(0, FormatErrorKind::MissingHeader, "no `h3` header")),
            Some((_, l)) if l.starts_with('#') => continue,
            Some((no, l)) => break (no + 1, l),
        }
    };
    let (header_no, header_line) = header;
    let parts: Vec<&str> = header_line.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "h3" {
        return Err(err(
            header_no,
            FormatErrorKind::BadHeader,
            format!("expected `h3 <n> <m>`, got `{header_line}`"),
        ));
    }
    let n: u32 = parts[1].parse().map_err(|_| {
        err(
            header_no,
            FormatErrorKind::BadHeader,
            format!("bad vertex count `{}`", parts[1]),
        )
    })?;
    let m: usize = parts[2].parse().map_err(|_| {
        err(
            header_no,
            FormatErrorKind::BadHeader,
            format!("bad edge count `{}`", parts[2]),
        )
    })?;

    let mut edges: Vec<[u32; 3]> = Vec::with_capacity(m);
    let mut last_no = header_no;
    while edges.len() < m {
        let Some((no, line)) = lines.next() else {
            return Err(err(
                last_no,
                FormatErrorKind::MissingEdges,
                format!("header promises {m} edges, file has {}", edges.len()),
            ));
        };
        let no = no + 1;
        last_no = no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(err(
                no,
                FormatErrorKind::BadTriple,
                format!("expected three labels, got `{line}`"),
            ));
        }
        let mut e = [0u32; 3];
        for (slot, f) in e.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| err(no, FormatErrorKind::BadTriple, format!("bad label `{f}`")))?;
        }
        if !(e[0] < e[1] && e[1] < e[2]) {
            return Err(err(
                no,
                FormatErrorKind::TripleNotSorted,
                format!("{} {} {}", e[0], e[1], e[2]),
            ));
        }
        if e[2] >= n {
            return Err(err(
                no,
                FormatErrorKind::LabelOutOfRange,
                format!("label {} with n = {n}", e[2]),
            ));
        }
        if edges.contains(&e) {
            return Err(err(
                no,
                FormatErrorKind::DuplicateEdge,
                format!("{} {} {}", e[0], e[1], e[2]),
            ));
        }
        edges.push(e);
    }

    let mut witness = None;
    for (no, line) in lines {
        let no = no + 1;
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with("witness") {
            if witness.is_some() {
                return Err(err(
                    no,
                    FormatErrorKind::TrailingContent,
                    "second witness line",
                ));
            }
            witness = Some(parse_witness_line(line, no, n)?);
            continue;
        }
        return Err(err(
            no,
            FormatErrorKind::TrailingContent,
            format!("unexpected line `{line}`"),
        ));
    }

    let graph = Hypergraph3::new(n, edges)
        .map_err(|e| err(last_no, FormatErrorKind::BadTriple, format!("{e:?}")))?;
    Ok(HostFile { graph, witness })
}

fn labels_csv(set: &VertexSubset) -> String {
    let labels: Vec<String> = set.to_vec().iter().map(|x| x.to_string()).collect();
    labels.join(",")
}

pub fn serialize_host(host: &HostFile) -> String {
    let g = &host.graph;
    let mut out = format!("h3 {} {}\n", g.num_vertices(), g.num_edges());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e[0], e[1], e[2]));
    }
    if let Some(w) = &host.witness {
        out.push_str(&format!(
            "witness A={} B={} u={} v={}\n",
            labels_csv(&w.a),
            labels_csv(&w.b),
            w.u,
            w.v
        ));
    }
    out
}

pub fn serialize_graph(g: &Hypergraph3) -> String {
    serialize_host(&HostFile {
        graph: g.clone(),
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = "h3 5 2\n0 1 2\n2 3 4\n";
        let host = parse_host(text).unwrap();
        assert_eq!(host.graph.num_vertices(), 5);
        assert_eq!(host.graph.num_edges(), 2);
        assert!(host.witness.is_none());
        assert_eq!(serialize_host(&host), text);
    }

    #[test]
    fn witness_round_trip() {
        let text = "h3 6 2\n0 1 2\n2 3 4\nwitness A=0,1 B=3,4 u=2 v=5\n";
        let host = parse_host(text).unwrap();
        let w = host.witness.as_ref().unwrap();
        assert_eq!(w.a.to_vec(), vec![0, 1]);
        assert_eq!(w.u, 2);
        assert_eq!(serialize_host(&host), text);
    }

    #[test]
    fn comments_before_header_only() {
        let ok = "# generated\n# seed 7\nh3 3 1\n0 1 2\n";
        assert!(parse_host(ok).is_ok());
        let bad = "h3 3 1\n# late comment\n0 1 2\n";
        let e = parse_host(bad).unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::BadTriple);
        assert_eq!(e.line, 2);
    }

    #[test]
    fn each_malformation_gets_its_own_code() {
        let cases = [
            ("", FormatErrorKind::MissingHeader, 0),
            ("h3 x 1\n0 1 2\n", FormatErrorKind::BadHeader, 1),
            ("g3 3 1\n0 1 2\n", FormatErrorKind::BadHeader, 1),
            ("h3 3 1\n0 1\n", FormatErrorKind::BadTriple, 2),
            ("h3 3 1\n2 1 0\n", FormatErrorKind::TripleNotSorted, 2),
            ("h3 3 1\n0 1 3\n", FormatErrorKind::LabelOutOfRange, 2),
            ("h3 4 2\n0 1 2\n0 1 2\n", FormatErrorKind::DuplicateEdge, 3),
            ("h3 4 2\n0 1 2\n", FormatErrorKind::MissingEdges, 2),
            (
                "h3 3 1\n0 1 2\nstray\n",
                FormatErrorKind::TrailingContent,
                3,
            ),
            (
                "h3 3 1\n0 1 2\nwitness A=0\n",
                FormatErrorKind::BadWitness,
                3,
            ),
        ];
        for (text, kind, line) in cases {
            let e = parse_host(text).unwrap_err();
            assert_eq!(e.kind, kind, "input {text:?}");
            assert_eq!(e.line, line, "input {text:?}");
        }
    }
}
