use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::Graph;

/// Dense symmetric matrix of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Builds a matrix from explicit rows. Rows must be square; no metric
    /// axioms are checked.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(DistanceMatrix {
            n,
            d: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.d.chunks(self.n.max(1)).take(self.n)
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Multiset of sorted rows; equal for isomorphic graphs.
    pub fn row_multiset(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self
            .rows()
            .map(|r| {
                let mut r = r.to_vec();
                r.sort_unstable();
                r
            })
            .collect();
        rows.sort();
        rows
    }
}

fn bfs(g: &Graph, source: usize) -> Option<Vec<u32>> {
    let mut dist = vec![u32::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = next;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    (reached == g.order()).then_some(dist)
}

/// Unweighted all-pairs shortest paths by one BFS per source.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.order();
    let rows: Option<Vec<Vec<u32>>> = (0..n).into_par_iter().map(|s| bfs(g, s)).collect();
    let rows = rows.ok_or(GraphError::Disconnected)?;
    Ok(DistanceMatrix {
        n,
        d: rows.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_triangle() {
        let p3 = Graph::connected(3, [(0, 1), (1, 2)]).unwrap();
        let dm = all_pairs_distances(&p3).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.diameter(), 2);

        let k3 = Graph::connected(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let dm = all_pairs_distances(&k3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(dm.get(i, j), u32::from(i != j));
            }
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::build(4, [(0, 1), (2, 3)], crate::BuildMode::Plain).unwrap();
        assert_eq!(
            all_pairs_distances(&g).unwrap_err(),
            GraphError::Disconnected
        );
    }

    #[test]
    fn from_rows_rejects_ragged() {
        assert!(DistanceMatrix::from_rows(vec![vec![0, 1], vec![1]]).is_none());
        let dm = DistanceMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(dm.row(1), &[1, 0]);
    }
}
