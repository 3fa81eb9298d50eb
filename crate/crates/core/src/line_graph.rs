use crate::error::GraphError;
use crate::graph::{Edge, Graph};

/// A line graph together with the base edge behind each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    base_edges: Vec<Edge>,
    line_graph: Graph,
}

impl LineGraphMap {
    /// Base edges in canonical order; entry `i` is line-graph vertex `i`.
    pub fn base_edges(&self) -> &[Edge] {
        &self.base_edges
    }

    pub fn line_graph(&self) -> &Graph {
        &self.line_graph
    }

    pub fn base_edge(&self, vertex: usize) -> Option<&Edge> {
        self.base_edges.get(vertex)
    }
}

/// Builds L(g): one vertex per edge of `g`, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraphMap, GraphError> {
    if g.size() == 0 {
        return Err(GraphError::EmptyEdgeSet);
    }
    let mut pairs = Vec::new();
    // Edges meeting at a vertex form a clique in L(g).
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.u()].push(i);
        incident[e.v()].push(i);
    }
    for star in &incident {
        for (a, &i) in star.iter().enumerate() {
            for &j in &star[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    let line_graph = Graph::build(g.size(), pairs, crate::BuildMode::Plain)?;
    Ok(LineGraphMap {
        base_edges: g.edges().to_vec(),
        line_graph,
    })
}
