//! Simple undirected graphs with cached vertex and line-graph distances.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::GraphError;
use crate::line_graph::{line_graph, LineGraphMap};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.u == vertex || self.v == vertex
    }

    /// True when the two edges are distinct and meet in a vertex.
    pub fn is_adjacent_to(&self, other: &Edge) -> bool {
        self != other && (other.contains(self.u) || other.contains(self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Whether construction should reject disconnected input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BuildMode {
    #[default]
    Plain,
    /// Every metric operation assumes a connected graph.
    Metric,
}

struct LineCache {
    map: LineGraphMap,
    distances: DistanceMatrix,
}

/// Simple undirected graph on vertices `0..order`.
///
/// Edges are kept in canonical (lexicographic) order; position `i` in
/// [`Graph::edges`] is vertex `i` of the line graph. Vertex and line-graph
/// distance matrices are computed on first use and cached.
pub struct Graph {
    order: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    connected: bool,
    vertex_distances: OnceLock<DistanceMatrix>,
    line: OnceLock<Box<LineCache>>,
}

impl Graph {
    /// Builds a graph from vertex pairs, rejecting loops, repeated pairs and
    /// out-of-range vertices. `BuildMode::Metric` also rejects disconnected input.
    pub fn build(
        order: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        mode: BuildMode,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(GraphError::VertexOutOfRange { vertex, order });
                }
            }
            edges.push(Edge::new(a, b)?);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }

        let mut adjacency = vec![Vec::new(); order];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edge_index = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let connected = is_connected(&adjacency);
        if mode == BuildMode::Metric && !connected {
            return Err(GraphError::Disconnected);
        }
        Ok(Graph {
            order,
            adjacency,
            edges,
            edge_index,
            connected,
            vertex_distances: OnceLock::new(),
            line: OnceLock::new(),
        })
    }

    /// Shorthand for [`Graph::build`] in metric mode.
    pub fn connected(
        order: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::build(order, pairs, BuildMode::Metric)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Position of `edge` in the canonical edge order, i.e. its line-graph vertex.
    pub fn edge_position(&self, edge: &Edge) -> Option<usize> {
        self.edge_index.get(edge).copied()
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v))
    }

    /// All-pairs vertex distances, computed once.
    pub fn vertex_distances(&self) -> Result<&DistanceMatrix, GraphError> {
        if let Some(dm) = self.vertex_distances.get() {
            return Ok(dm);
        }
        let dm = all_pairs_distances(self)?;
        Ok(self.vertex_distances.get_or_init(|| dm))
    }

    fn line_cache(&self) -> Result<&LineCache, GraphError> {
        if let Some(cache) = self.line.get() {
            return Ok(cache);
        }
        if !self.connected {
            return Err(GraphError::Disconnected);
        }
        let map = line_graph(self)?;
        let distances = all_pairs_distances(map.line_graph())?;
        Ok(self
            .line
            .get_or_init(|| Box::new(LineCache { map, distances })))
    }

    /// The line graph together with its edge correspondence, computed once.
    pub fn line_graph_map(&self) -> Result<&LineGraphMap, GraphError> {
        Ok(&self.line_cache()?.map)
    }

    /// All-pairs edge distances (distances in the line graph), computed once.
    pub fn line_distances(&self) -> Result<&DistanceMatrix, GraphError> {
        Ok(&self.line_cache()?.distances)
    }

    /// Edge distance between two edges of the graph.
    pub fn edge_distance(&self, f: &Edge, h: &Edge) -> Result<u32, GraphError> {
        let i = self
            .edge_position(f)
            .ok_or(GraphError::EdgeNotInGraph(f.u, f.v))?;
        let j = self
            .edge_position(h)
            .ok_or(GraphError::EdgeNotInGraph(h.u, h.v))?;
        Ok(self.line_distances()?.get(i, j))
    }
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            order: self.order,
            adjacency: self.adjacency.clone(),
            edges: self.edges.clone(),
            edge_index: self.edge_index.clone(),
            connected: self.connected,
            vertex_distances: OnceLock::new(),
            line: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

fn is_connected(adjacency: &[Vec<usize>]) -> bool {
    let n = adjacency.len();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}
