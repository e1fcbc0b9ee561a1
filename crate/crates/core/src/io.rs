//! Graph documents (JSON), dot export and catalog records.
//!
//! A graph document looks like
//!
//! ```json
//! {
//!   "name": "P3",
//!   "vertices": ["a", "b", "c"],
//!   "edges": [["a", "b"], ["b", "c"]],
//!   "labels": {"a": 1, "b": 2, "c": 4}
//! }
//! ```
//!
//! `name` and `labels` are optional. Vertex order in the parsed graph follows
//! the `vertices` array.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph, Labeling, Signature};
use crate::search::CatalogEntry;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<IndexMap<String, u64>>,
}

/// A validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDocument {
    pub name: Option<String>,
    pub graph: Graph,
    pub labeling: Option<Labeling>,
}

impl ParsedDocument {
    pub fn labeled(&self) -> Option<LabeledGraph> {
        let labeling = self.labeling.clone()?;
        Some(LabeledGraph::new(self.graph.clone(), labeling).expect("labels validated as total"))
    }
}

fn vertex_names(g: &Graph) -> Vec<String> {
    match g.names() {
        Some(names) => names.to_vec(),
        None => (0..g.order()).map(|v| v.to_string()).collect(),
    }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, name: Option<&str>) -> Self {
        let vertices = vertex_names(g);
        let edges = g
            .edges()
            .map(|(u, v)| [vertices[u].clone(), vertices[v].clone()])
            .collect();
        GraphDocument {
            name: name.map(str::to_string),
            vertices,
            edges,
            labels: None,
        }
    }

    pub fn from_labeled(lg: &LabeledGraph, name: Option<&str>) -> Self {
        let mut doc = GraphDocument::from_graph(lg.graph(), name);
        doc.labels = Some(doc.vertices.iter().cloned().zip(lg.labels().iter().copied()).collect());
        doc
    }

    /// Checks the schema invariants and builds the graph.
    pub fn validate(&self) -> Result<ParsedDocument> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::document(
                    format!("vertices[{i}]"),
                    format!("duplicate vertex '{v}'"),
                ));
            }
        }
        let mut seen = HashSet::with_capacity(self.edges.len());
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, [a, b]) in self.edges.iter().enumerate() {
            let lookup = |j: usize, name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::document(format!("edges[{i}][{j}]"), format!("unknown vertex '{name}'")))
            };
            let (u, v) = (lookup(0, a)?, lookup(1, b)?);
            if u == v {
                return Err(Error::document(format!("edges[{i}]"), format!("self-loop at '{a}'")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::document(
                    format!("edges[{i}]"),
                    format!("duplicate edge '{a}'-'{b}'"),
                ));
            }
            edges.push((u, v));
        }
        let graph = Graph::from_edges(self.vertices.len(), edges)?.with_names(self.vertices.iter().cloned())?;

        let labeling = match &self.labels {
            None => None,
            Some(labels) => {
                let mut values = vec![0u64; self.vertices.len()];
                let mut assigned = vec![false; self.vertices.len()];
                for (key, &label) in labels {
                    let v = *index
                        .get(key.as_str())
                        .ok_or_else(|| Error::document(format!("labels.{key}"), "unknown vertex"))?;
                    if label == 0 {
                        return Err(Error::document(format!("labels.{key}"), "labels must be positive"));
                    }
                    values[v] = label;
                    assigned[v] = true;
                }
                if let Some(v) = assigned.iter().position(|&a| !a) {
                    return Err(Error::document(
                        "labels",
                        format!("no label for vertex '{}'", self.vertices[v]),
                    ));
                }
                Some(Labeling::new(values)?)
            }
        };
        Ok(ParsedDocument {
            name: self.name.clone(),
            graph,
            labeling,
        })
    }
}

/// Parses and validates a JSON graph document.
pub fn parse_graph_document(text: &str) -> Result<ParsedDocument> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: GraphDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::document(
            if path.is_empty() { ".".to_string() } else { path },
            e.into_inner().to_string(),
        )
    })?;
    doc.validate()
}

pub fn emit_json(lg: &LabeledGraph, name: Option<&str>) -> String {
    document_json(&GraphDocument::from_labeled(lg, name))
}

pub fn emit_graph_json(g: &Graph, name: Option<&str>) -> String {
    document_json(&GraphDocument::from_graph(g, name))
}

fn document_json(doc: &GraphDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected dot graph; nodes in vertex order, edges in lexicographic order.
pub fn emit_dot(lg: &LabeledGraph, name: Option<&str>) -> String {
    let g = lg.graph();
    let ids: Vec<String> = match g.names() {
        Some(names) => names.iter().map(|n| dot_id(n)).collect(),
        None => (0..g.order()).map(|v| format!("n{v}")).collect(),
    };
    let mut out = String::new();
    writeln!(out, "graph {} {{", dot_id(name.unwrap_or("G"))).unwrap();
    for (v, id) in ids.iter().enumerate() {
        writeln!(out, "  {id} [label=\"{}\"];", lg.label(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", ids[u], ids[v]).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line of a catalog file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub order: usize,
    pub canonical_form: String,
    pub witness: Vec<u64>,
    pub edge_count: usize,
}

impl From<&CatalogEntry> for CatalogRecord {
    fn from(e: &CatalogEntry) -> Self {
        CatalogRecord {
            order: e.order,
            canonical_form: e.form.to_hex(),
            witness: e.witness.values().to_vec(),
            edge_count: e.edge_count,
        }
    }
}

impl CatalogRecord {
    pub fn to_entry(&self) -> Result<CatalogEntry> {
        Ok(CatalogEntry {
            order: self.order,
            form: CanonicalForm::from_hex(self.order, &self.canonical_form)?,
            witness: Signature::new(self.witness.clone())?,
            edge_count: self.edge_count,
        })
    }
}

/// JSON lines, one record per entry, in the given order.
pub fn catalog_to_jsonl(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&serde_json::to_string(&CatalogRecord::from(e)).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str(line).map_err(|e| Error::document(format!("line {}", i + 1), e.to_string()))
        })
        .collect()
}
