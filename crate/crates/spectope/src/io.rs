//! File formats: JSON (embedding included), graph6 (abstract graph only)
//! and DOT (for looking at).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use spectope_core::planarity::embed;
use spectope_core::spectra::{QnWitness, SpectrumReport, WitnessFace};
use spectope_core::transform::Step;
use spectope_core::{ConstructionTrace, EmbeddedGraph};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph: {0}")]
    Graph(#[from] spectope_core::Error),
    #[error("order field says {field} but there are {actual} rotations")]
    OrderMismatch { field: usize, actual: usize },
    #[error("faces checksum mismatch: file has {file}, graph gives {actual}")]
    Checksum { file: String, actual: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("label {0} points outside the graph")]
    Label(String),
}

/// On-disk form of an embedded graph. Rotation order is part of the data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub order: usize,
    pub rotations: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: BTreeMap<String, usize>,
    pub faces_checksum: String,
}

/// SHA-256 over the face list: each face starts at its least vertex, faces
/// sorted, one per line.
pub fn faces_checksum(g: &EmbeddedGraph) -> String {
    let mut faces: Vec<Vec<usize>> = g
        .faces()
        .iter()
        .map(|f| {
            let c = f.cycle();
            let i = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
            c[i..].iter().chain(&c[..i]).copied().collect()
        })
        .collect();
    faces.sort();
    let mut h = Sha256::new();
    for f in faces {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        h.update(line.join(" ").as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

impl GraphDoc {
    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        GraphDoc {
            order: g.order(),
            rotations: g.rotations().to_vec(),
            labels: g.labels().clone(),
            faces_checksum: faces_checksum(g),
        }
    }

    pub fn to_graph(&self) -> Result<EmbeddedGraph, FormatError> {
        if self.order != self.rotations.len() {
            return Err(FormatError::OrderMismatch {
                field: self.order,
                actual: self.rotations.len(),
            });
        }
        let mut g = EmbeddedGraph::from_rotations(self.rotations.clone())?;
        for (k, &v) in &self.labels {
            if v >= g.order() {
                return Err(FormatError::Label(k.clone()));
            }
            g.set_label(k, v);
        }
        let actual = faces_checksum(&g);
        if actual != self.faces_checksum {
            return Err(FormatError::Checksum {
                file: self.faces_checksum.clone(),
                actual,
            });
        }
        Ok(g)
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn to_json(g: &EmbeddedGraph) -> String {
    pretty(&GraphDoc::from_graph(g))
}

pub fn from_json(s: &str) -> Result<EmbeddedGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(s)?;
    doc.to_graph()
}

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
}

/// graph6 line (no trailing newline). The embedding is dropped.
pub fn to_graph6(g: &EmbeddedGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_n(&mut out, n);
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Edge list of a graph6 line.
pub fn parse_graph6(line: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let bad = |m: &str| FormatError::Graph6(m.to_string());
    let b = line.trim_end().as_bytes();
    let b = b.strip_prefix(b">>graph6<<").unwrap_or(b);
    if b.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize);
    let (n, body) = match b {
        [] => return Err(bad("empty line")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(bad("truncated order")),
        [c, rest @ ..] => ((c - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad("body length does not match the order"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok((n, edges))
}

/// A graph6 line with a planar embedding computed for it.
pub fn from_graph6(line: &str) -> Result<EmbeddedGraph, FormatError> {
    let (n, edges) = parse_graph6(line)?;
    let g = EmbeddedGraph::from_edges(n, &edges)?;
    Ok(embed(&g)?)
}

pub fn to_dot(g: &EmbeddedGraph) -> String {
    let mut s = String::from("graph G {\n");
    let names: BTreeMap<usize, &str> = g.labels().iter().map(|(k, &v)| (v, k.as_str())).collect();
    for v in 0..g.order() {
        match names.get(&v) {
            Some(l) => s.push_str(&format!("  {v} [label=\"{v}:{l}\"];\n")),
            None => s.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

/// Reads JSON or graph6, told apart by the first byte.
pub fn read_graph(text: &str) -> Result<EmbeddedGraph, FormatError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_graph6(text.lines().next().unwrap_or(""))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    G6,
    Dot,
    Json,
}

pub fn emit(g: &EmbeddedGraph, how: Emit) -> String {
    match how {
        Emit::G6 => to_graph6(g) + "\n",
        Emit::Dot => to_dot(g),
        Emit::Json => to_json(g),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessDoc {
    /// `[v1, v2, v3]` per designated triangle, `v3` the third corner.
    pub faces: Vec<[usize; 3]>,
}

impl From<&QnWitness> for WitnessDoc {
    fn from(w: &QnWitness) -> Self {
        WitnessDoc {
            faces: w.faces.iter().map(|f| [f.v1, f.v2, f.v3]).collect(),
        }
    }
}

impl From<&WitnessDoc> for QnWitness {
    fn from(d: &WitnessDoc) -> Self {
        QnWitness {
            faces: d
                .faces
                .iter()
                .map(|&[v1, v2, v3]| WitnessFace { v1, v2, v3 })
                .collect(),
        }
    }
}

pub fn witness_to_json(w: &QnWitness) -> String {
    pretty(&WitnessDoc::from(w))
}

pub fn witness_from_json(s: &str) -> Result<QnWitness, FormatError> {
    let d: WitnessDoc = serde_json::from_str(s)?;
    Ok(QnWitness::from(&d))
}

#[derive(Serialize)]
pub struct Verdict<'a> {
    pub property: String,
    pub n: usize,
    pub pass: bool,
    pub order: usize,
    pub expected_order: Option<usize>,
    pub certification: Option<String>,
    pub failures: &'a [String],
    pub witness: Option<WitnessDoc>,
}

pub fn verdict_json(r: &SpectrumReport) -> String {
    pretty(&Verdict {
        property: format!("{:?}", r.property),
        n: r.n,
        pass: r.pass,
        order: r.order,
        expected_order: r.expected_order,
        certification: r.certification.map(|c| format!("{c:?}")),
        failures: &r.failures,
        witness: r.witness.as_ref().map(WitnessDoc::from),
    })
}

#[derive(Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
enum StepDoc<'a> {
    Split {
        face: &'a [usize],
        new_vertex: usize,
    },
    HSplit {
        face: &'a [usize],
        about: usize,
        h: usize,
        new_vertices: &'a [usize],
    },
    Glue {
        name: &'a str,
        host_terminals: &'a [usize],
        gadget_attachments: &'a [usize],
        id_map: &'a [usize],
    },
}

#[derive(Serialize)]
struct CheckpointDoc<'a> {
    name: &'a str,
    order: usize,
    map: &'a [usize],
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    steps: Vec<StepDoc<'a>>,
    checkpoints: Vec<CheckpointDoc<'a>>,
}

pub fn trace_json(t: &ConstructionTrace) -> String {
    let steps = t
        .steps()
        .iter()
        .map(|s| match s {
            Step::Split { face, new_vertex } => StepDoc::Split {
                face: face.cycle(),
                new_vertex: *new_vertex,
            },
            Step::HSplit {
                face,
                about,
                h,
                new_vertices,
            } => StepDoc::HSplit {
                face: face.cycle(),
                about: *about,
                h: *h,
                new_vertices,
            },
            Step::Glue {
                name,
                host_terminals,
                gadget_attachments,
                id_map,
            } => StepDoc::Glue {
                name,
                host_terminals,
                gadget_attachments,
                id_map,
            },
        })
        .collect();
    let checkpoints = t
        .checkpoints()
        .iter()
        .map(|c| CheckpointDoc {
            name: &c.name,
            order: c.order,
            map: &c.map,
        })
        .collect();
    pretty(&TraceDoc { steps, checkpoints })
}
