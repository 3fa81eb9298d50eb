//! Labeled constructors for cycles, paths, sunlets, prisms and generalized
//! Petersen graphs.
//!
//! Label conventions (vertex numbering in brackets):
//!
//! * cycle `C_n`: `c_i = [i, i+1]`
//! * path `P_n`: `p_i = [i, i+1]`
//! * sunlet `S_n`: cycle vertices `0..n`, pendant vertex `n+i` hangs off
//!   cycle vertex `i`; `e_i = [i-1, i]` and `f_i = [i, n+i]`, so `f_i` sits at
//!   the vertex shared by `e_i` and `e_{i+1}`.
//! * prism `Y_n`: inner vertices `0..n`, outer `n..2n`; `e_i = [i, i+1]`,
//!   `g_i = [n+i, n+i+1]`, spoke `f_i = [i, n+i]` joins the vertex shared by
//!   `e_{i-1}, e_i` to the vertex shared by `g_{i-1}, g_i`.
//! * generalized Petersen `GP(n, k)`: `e_i = [i, i+1]` on the outer cycle,
//!   spokes `f_i = [i, n+i]`, inner `g_i = [n+i, n+i+k]`. `GP(n, 1)` carries
//!   exactly the prism labels.
//!
//! All indices are taken mod `n`. With these orientations the edge-distance
//! partitions from `e_0` (sunlet) and `f_0` (prism) come out as
//! `S_1(e_0) = {f_0, e_1, f_{n-1}, e_{n-1}}` and
//! `S_1(f_0) = {e_0, g_0, e_{n-1}, g_{n-1}}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::{Edge, Graph};

/// Which family a graph was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Cycle(usize),
    Path(usize),
    Sunlet(usize),
    Prism(usize),
    GeneralizedPetersen(usize, usize),
    CartesianProduct(Box<FamilyTag>, Box<FamilyTag>),
    /// Loaded from a file without a recognised family.
    Custom,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Cycle(n) => write!(f, "cycle:{n}"),
            FamilyTag::Path(n) => write!(f, "path:{n}"),
            FamilyTag::Sunlet(n) => write!(f, "sunlet:{n}"),
            FamilyTag::Prism(n) => write!(f, "prism:{n}"),
            FamilyTag::GeneralizedPetersen(n, k) => write!(f, "gp:{n}:{k}"),
            FamilyTag::CartesianProduct(a, b) => write!(f, "({a})x({b})"),
            FamilyTag::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidSpec(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize, GraphError> {
            parts.get(i).ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        let tag = match (parts[0], parts.len()) {
            ("cycle", 2) => FamilyTag::Cycle(num(1)?),
            ("path", 2) => FamilyTag::Path(num(1)?),
            ("sunlet", 2) => FamilyTag::Sunlet(num(1)?),
            ("prism", 2) => FamilyTag::Prism(num(1)?),
            ("gp", 3) => FamilyTag::GeneralizedPetersen(num(1)?, num(2)?),
            ("custom", 1) => FamilyTag::Custom,
            _ => return Err(bad()),
        };
        Ok(tag)
    }
}

impl FamilyTag {
    /// Generates the tagged family member. Products and custom graphs have no
    /// generator of their own.
    pub fn generate(&self) -> Result<LabeledFamilyGraph, GraphError> {
        match *self {
            FamilyTag::Cycle(n) => make_cycle(n),
            FamilyTag::Path(n) => make_path(n),
            FamilyTag::Sunlet(n) => make_sunlet(n),
            FamilyTag::Prism(n) => make_prism(n),
            FamilyTag::GeneralizedPetersen(n, k) => make_generalized_petersen(n, k),
            FamilyTag::CartesianProduct(..) | FamilyTag::Custom => {
                Err(GraphError::InvalidSpec(self.to_string()))
            }
        }
    }
}

/// A family specifier or a graph JSON file, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Family(FamilyTag),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_prefix("file:") {
            Some(path) if !path.is_empty() => Ok(GraphSpec::File(PathBuf::from(path))),
            Some(_) => Err(GraphError::InvalidSpec(s.to_string())),
            None => s.parse().map(GraphSpec::Family),
        }
    }
}

impl GraphSpec {
    pub fn load(&self) -> Result<LabeledFamilyGraph, GraphError> {
        match self {
            GraphSpec::Family(tag) => tag.generate(),
            GraphSpec::File(path) => crate::io::read_graph_json(path),
        }
    }
}

/// Bidirectional map between edge labels and edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLabels {
    by_label: BTreeMap<String, Edge>,
    by_edge: HashMap<Edge, String>,
}

impl EdgeLabels {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, label: impl Into<String>, edge: Edge) -> Result<(), GraphError> {
        let label = label.into();
        if self.by_label.contains_key(&label) {
            return Err(GraphError::InvalidLabels(format!(
                "label {label} used twice"
            )));
        }
        if let Some(prev) = self.by_edge.get(&edge) {
            return Err(GraphError::InvalidLabels(format!(
                "edge {edge} labeled both {prev} and {label}"
            )));
        }
        self.by_edge.insert(edge, label.clone());
        self.by_label.insert(label, edge);
        Ok(())
    }

    pub fn edge(&self, label: &str) -> Option<Edge> {
        self.by_label.get(label).copied()
    }

    pub fn label(&self, edge: &Edge) -> Option<&str> {
        self.by_edge.get(edge).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.by_label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_label.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Edge)> {
        self.by_label.iter().map(|(l, e)| (l.as_str(), e))
    }
}

/// A graph with its family tag and (optional, but then complete) edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFamilyGraph {
    pub graph: Graph,
    pub tag: FamilyTag,
    pub labels: EdgeLabels,
}

impl LabeledFamilyGraph {
    /// Validates that `labels` is empty or names every edge of `graph` exactly once.
    pub fn new(graph: Graph, tag: FamilyTag, labels: EdgeLabels) -> Result<Self, GraphError> {
        if !labels.is_empty() {
            if labels.len() != graph.size() {
                return Err(GraphError::InvalidLabels(format!(
                    "{} labels for {} edges",
                    labels.len(),
                    graph.size()
                )));
            }
            if let Some((l, e)) = labels
                .iter()
                .find(|(_, e)| graph.edge_position(e).is_none())
            {
                return Err(GraphError::InvalidLabels(format!("{l} names non-edge {e}")));
            }
        }
        Ok(LabeledFamilyGraph { graph, tag, labels })
    }

    pub fn has_labels(&self) -> bool {
        !self.labels.is_empty()
    }

    pub fn edge(&self, label: &str) -> Option<Edge> {
        self.labels.edge(label)
    }

    /// Line-graph index of the labeled edge.
    pub fn line_index(&self, label: &str) -> Option<usize> {
        self.labels
            .edge(label)
            .and_then(|e| self.graph.edge_position(&e))
    }

    /// Label of line-graph vertex `index`, falling back to the raw index.
    pub fn edge_name(&self, index: usize) -> String {
        self.graph
            .edges()
            .get(index)
            .and_then(|e| self.labels.label(e))
            .map_or_else(|| index.to_string(), str::to_string)
    }

    /// Edge distance between two labeled edges.
    pub fn labeled_edge_distance(&self, a: &str, b: &str) -> Result<u32, GraphError> {
        let find = |l: &str| {
            self.edge(l)
                .ok_or_else(|| GraphError::InvalidLabels(format!("unknown label {l}")))
        };
        self.graph.edge_distance(&find(a)?, &find(b)?)
    }
}

fn family(
    order: usize,
    tag: FamilyTag,
    labeled: Vec<(String, usize, usize)>,
) -> Result<LabeledFamilyGraph, GraphError> {
    let graph = Graph::connected(order, labeled.iter().map(|&(_, a, b)| (a, b)))?;
    let mut labels = EdgeLabels::new();
    for (name, a, b) in labeled {
        labels.insert(name, Edge::new(a, b)?)?;
    }
    LabeledFamilyGraph::new(graph, tag, labels)
}

fn require(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        return Err(GraphError::ParameterTooSmall { family, min, got });
    }
    Ok(())
}

pub fn make_cycle(n: usize) -> Result<LabeledFamilyGraph, GraphError> {
    require("cycle", 3, n)?;
    let edges = (0..n).map(|i| (format!("c{i}"), i, (i + 1) % n)).collect();
    family(n, FamilyTag::Cycle(n), edges)
}

/// Path on `n` vertices.
pub fn make_path(n: usize) -> Result<LabeledFamilyGraph, GraphError> {
    require("path", 2, n)?;
    let edges = (0..n - 1).map(|i| (format!("p{i}"), i, i + 1)).collect();
    family(n, FamilyTag::Path(n), edges)
}

pub fn make_sunlet(n: usize) -> Result<LabeledFamilyGraph, GraphError> {
    require("sunlet", 3, n)?;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((format!("e{i}"), (i + n - 1) % n, i));
        edges.push((format!("f{i}"), i, n + i));
    }
    family(2 * n, FamilyTag::Sunlet(n), edges)
}

pub fn make_prism(n: usize) -> Result<LabeledFamilyGraph, GraphError> {
    require("prism", 3, n)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((format!("e{i}"), i, (i + 1) % n));
        edges.push((format!("f{i}"), i, n + i));
        edges.push((format!("g{i}"), n + i, n + (i + 1) % n));
    }
    family(2 * n, FamilyTag::Prism(n), edges)
}

pub fn make_generalized_petersen(n: usize, k: usize) -> Result<LabeledFamilyGraph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GraphError::ParameterOutOfRange(format!(
            "GP(n, k) needs n >= 3 and 1 <= k < n/2, got n = {n}, k = {k}"
        )));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((format!("e{i}"), i, (i + 1) % n));
        edges.push((format!("f{i}"), i, n + i));
        edges.push((format!("g{i}"), n + i, n + (i + k) % n));
    }
    family(2 * n, FamilyTag::GeneralizedPetersen(n, k), edges)
}

/// Cartesian product; vertex `(x, y)` is numbered `x * b.order() + y`.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    if !a.is_connected() || !b.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let nb = b.order();
    let mut pairs = Vec::with_capacity(a.order() * b.size() + b.order() * a.size());
    for x in 0..a.order() {
        for (y1, y2) in b.edge_pairs() {
            pairs.push((x * nb + y1, x * nb + y2));
        }
    }
    for (x1, x2) in a.edge_pairs() {
        for y in 0..nb {
            pairs.push((x1 * nb + y, x2 * nb + y));
        }
    }
    Graph::connected(a.order() * nb, pairs)
}

/// Cartesian product of two labeled families; the result is unlabeled.
pub fn cartesian_product_family(
    a: &LabeledFamilyGraph,
    b: &LabeledFamilyGraph,
) -> Result<LabeledFamilyGraph, GraphError> {
    let graph = cartesian_product(&a.graph, &b.graph)?;
    let tag = FamilyTag::CartesianProduct(Box::new(a.tag.clone()), Box::new(b.tag.clone()));
    LabeledFamilyGraph::new(graph, tag, EdgeLabels::new())
}
