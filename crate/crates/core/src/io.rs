//! Graph JSON and DOT serialization.
//!
//! JSON layout: `{"order": n, "edges": [[u, v], ...], "labels": {"e0": [u, v], ...}}`.
//! `labels` is optional. An optional `family` string (e.g. `"sunlet:8"`) is
//! written by [`to_graph_json`] and restored on load.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::generators::{EdgeLabels, FamilyTag, LabeledFamilyGraph};
use crate::graph::{Edge, Graph};

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    order: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, [usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

pub fn to_graph_json(g: &LabeledFamilyGraph) -> String {
    let labels = g.has_labels().then(|| {
        g.labels
            .iter()
            .map(|(l, e)| (l.to_string(), e.endpoints()))
            .collect()
    });
    let family = match g.tag {
        FamilyTag::Custom | FamilyTag::CartesianProduct(..) => None,
        ref tag => Some(tag.to_string()),
    };
    let doc = GraphJson {
        order: g.graph.order(),
        edges: g.graph.edges().iter().map(Edge::endpoints).collect(),
        labels,
        family,
    };
    serde_json::to_string_pretty(&doc).expect("graph JSON is always serializable")
}

/// Parses graph JSON. The graph must be connected.
pub fn parse_graph_json(text: &str) -> Result<LabeledFamilyGraph, GraphError> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    let graph = Graph::connected(doc.order, doc.edges.iter().map(|&[u, v]| (u, v)))?;
    let mut labels = EdgeLabels::new();
    for (label, [u, v]) in doc.labels.unwrap_or_default() {
        labels.insert(label, Edge::new(u, v)?)?;
    }
    let tag = match doc.family {
        Some(f) => f.parse()?,
        None => FamilyTag::Custom,
    };
    LabeledFamilyGraph::new(graph, tag, labels)
}

pub fn read_graph_json(path: &Path) -> Result<LabeledFamilyGraph, GraphError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GraphError::Io(format!("{}: {e}", path.display())))?;
    parse_graph_json(&text)
}

/// DOT rendering of the graph, with edge labels when available.
pub fn to_dot(g: &LabeledFamilyGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.graph.order() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.graph.edges() {
        match g.labels.label(e) {
            Some(l) => {
                let _ = writeln!(out, "  {} -- {} [label=\"{l}\"];", e.u(), e.v());
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the line graph; nodes carry the edge labels.
pub fn line_graph_dot(g: &LabeledFamilyGraph) -> Result<String, GraphError> {
    let map = g.graph.line_graph_map()?;
    let mut out = String::from("graph L {\n");
    for (i, e) in map.base_edges().iter().enumerate() {
        let name = g
            .labels
            .label(e)
            .map_or_else(|| e.to_string(), str::to_string);
        let _ = writeln!(out, "  {i} [label=\"{name}\"];");
    }
    for e in map.line_graph().edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    Ok(out)
}
