//! JSON data files for the frozen catalog and gadget templates, each with a
//! SHA-256 over its payload.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use spectope_core::builders;
use spectope_core::gadgets::{self, Delta, GadgetContract, GadgetKind, Source, Template};

use crate::io::GraphDoc;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CatalogEntryDoc {
    pub name: String,
    pub n: usize,
    pub graph: GraphDoc,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Hashed<T> {
    pub sha256: String,
    pub payload: T,
}

fn sha(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl<T: Serialize> Hashed<T> {
    pub fn new(payload: T) -> Self {
        let body = serde_json::to_vec(&payload).expect("plain data serializes");
        Hashed {
            sha256: sha(&body),
            payload,
        }
    }

    pub fn verify(&self) -> anyhow::Result<()> {
        let body = serde_json::to_vec(&self.payload)?;
        if sha(&body) != self.sha256 {
            bail!("content hash mismatch");
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ContractDoc {
    pub attachments: Vec<String>,
    pub required_host_degrees: Option<Vec<usize>>,
    /// `"=k"` for an exact change, `">=k"` for a lower bound.
    pub deltas: Vec<String>,
    pub added_vertices: usize,
    pub added_edges: Option<usize>,
    /// `(label, degree, source)`, source `"fresh"` or an attachment label.
    pub marked: Vec<(String, usize, String)>,
    pub exposed: Vec<String>,
    pub hub: Option<String>,
    pub required_faces: Vec<(String, String, Option<String>)>,
}

impl From<&GadgetContract> for ContractDoc {
    fn from(c: &GadgetContract) -> Self {
        ContractDoc {
            attachments: c.attachments.clone(),
            required_host_degrees: c.required_host_degrees.clone(),
            deltas: c
                .deltas
                .iter()
                .map(|d| match d {
                    Delta::Exact(x) => format!("={x}"),
                    Delta::AtLeast(x) => format!(">={x}"),
                })
                .collect(),
            added_vertices: c.added_vertices,
            added_edges: c.added_edges,
            marked: c
                .marked
                .iter()
                .map(|m| {
                    let src = match m.source {
                        Source::Fresh => String::from("fresh"),
                        Source::Attachment(i) => c.attachments[i].clone(),
                    };
                    (m.label.clone(), m.degree, src)
                })
                .collect(),
            exposed: c.exposed.clone(),
            hub: c.hub.clone(),
            required_faces: c
                .required_faces
                .iter()
                .map(|f| (f.pair[0].clone(), f.pair[1].clone(), f.third.clone()))
                .collect(),
        }
    }
}

/// The search result a family is instantiated from.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct SeedDoc {
    pub base: Vec<Vec<usize>>,
    pub splits: Vec<[usize; 3]>,
    /// `(face, about, slope, intercept)`: h = slope·t + intercept.
    pub hsplits: Vec<([usize; 3], usize, i64, i64)>,
    pub labels: Vec<(String, usize)>,
}

impl From<&Template> for SeedDoc {
    fn from(t: &Template) -> Self {
        SeedDoc {
            base: t.base.clone(),
            splits: t.splits.clone(),
            hsplits: t.hsplits.iter().map(|r| (r.face, r.about, r.slope, r.intercept)).collect(),
            labels: t.labels.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GadgetDoc {
    pub kind: String,
    pub param: u64,
    pub contract: ContractDoc,
    pub seed: SeedDoc,
    /// The instance at `param`, attachments first.
    pub graph: GraphDoc,
}

/// Smallest parameter each family accepts.
pub fn min_param(kind: GadgetKind) -> u64 {
    match kind {
        GadgetKind::Pc => 1,
        GadgetKind::End1 | GadgetKind::EndPrime => 17,
        GadgetKind::End0 => 16,
        GadgetKind::S => 0,
    }
}

pub fn catalog_doc() -> Hashed<Vec<CatalogEntryDoc>> {
    Hashed::new(
        builders::build_catalog()
            .iter()
            .map(|e| CatalogEntryDoc {
                name: e.name.clone(),
                n: e.n,
                graph: GraphDoc::from_graph(&e.graph),
            })
            .collect(),
    )
}

pub fn gadgets_doc() -> anyhow::Result<Hashed<Vec<GadgetDoc>>> {
    let mut out = Vec::new();
    for kind in GadgetKind::ALL {
        let param = min_param(kind);
        let c = gadgets::contract(kind, param)?;
        let inst = gadgets::instance(&c)?;
        out.push(GadgetDoc {
            kind: kind.name().to_string(),
            param,
            contract: ContractDoc::from(&c),
            seed: SeedDoc::from(&gadgets::template(kind)),
            graph: GraphDoc::from_graph(&inst.graph),
        });
    }
    Ok(Hashed::new(out))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// File name and contents of every data file.
pub fn export() -> anyhow::Result<Vec<(&'static str, String)>> {
    Ok(vec![
        ("catalog.json", pretty(&catalog_doc())),
        ("gadgets.json", pretty(&gadgets_doc()?)),
    ])
}

/// Parses a catalog file, checking its hash and every graph's checksum.
pub fn load_catalog(text: &str) -> anyhow::Result<Vec<(String, spectope_core::EmbeddedGraph)>> {
    let doc: Hashed<Vec<CatalogEntryDoc>> = serde_json::from_str(text).context("catalog JSON")?;
    doc.verify()?;
    doc.payload
        .iter()
        .map(|e| Ok((e.name.clone(), e.graph.to_graph()?)))
        .collect()
}
