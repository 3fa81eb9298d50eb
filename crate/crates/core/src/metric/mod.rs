//! Resolving and doubly resolving sets over a distance matrix.
//!
//! A set `D` doubly resolves `u, v` when some `x, y ∈ D` give
//! `d(u,x) - d(u,y) != d(v,x) - d(v,y)`. That fails exactly when the vector
//! `(d(u,x) - d(v,x))_{x ∈ D}` is constant, which in turn holds exactly when
//! `u` and `v` have the same key `(d(u,x) - d(u,x_0))_{x ∈ D}` for a fixed
//! `x_0 ∈ D`. The checks below sort elements by that key, so a whole set is
//! tested in `O(n |D| log n)` rather than over all landmark pairs.
//!
//! Every element index refers to a row of the matrix. For the edge versions
//! the matrix is the line-graph distance matrix and indices are positions in
//! the canonical edge order.

mod greedy;
mod search;
mod subsets;

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::MetricError;
use crate::generators::LabeledFamilyGraph;

pub use greedy::greedy_doubly_resolving;
pub use search::{
    edge_metric_dimension, metric_dimension, min_cardinality_search, psi, psi_edge, SearchOptions,
    DEFAULT_BUDGET,
};
pub use subsets::{binomial, KSubsets};

/// Whether landmark indices name vertices of `G` or vertices of `L(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertex,
    #[serde(rename = "edge")]
    EdgeViaLineGraph,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Vertex => "vertex",
            Mode::EdgeViaLineGraph => "edge",
        })
    }
}

/// An ordered set of distinct element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Landmarks {
    elements: Vec<usize>,
    mode: Mode,
}

impl Landmarks {
    pub fn new(elements: Vec<usize>, mode: Mode) -> Result<Self, MetricError> {
        let mut seen = elements.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(MetricError::DuplicateLandmark(w[0]));
        }
        Ok(Landmarks { elements, mode })
    }

    pub fn vertex(elements: Vec<usize>) -> Result<Self, MetricError> {
        Self::new(elements, Mode::Vertex)
    }

    pub fn edge(elements: Vec<usize>) -> Result<Self, MetricError> {
        Self::new(elements, Mode::EdgeViaLineGraph)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Element names: edge labels in edge mode when the family has them,
    /// raw indices otherwise.
    pub fn names(&self, family: Option<&LabeledFamilyGraph>) -> Vec<String> {
        self.elements
            .iter()
            .map(|&i| match (self.mode, family) {
                (Mode::EdgeViaLineGraph, Some(f)) => f.edge_name(i),
                _ => i.to_string(),
            })
            .collect()
    }
}

/// Distances from one element to each landmark, in landmark order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Representation {
    pub coords: Vec<u32>,
}

/// Outcome of a set check; `witness` is present exactly when `ok` is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResolveReport {
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
}

impl ResolveReport {
    fn from_witness(witness: Option<(usize, usize)>) -> Self {
        ResolveReport {
            ok: witness.is_none(),
            witness,
        }
    }
}

/// The property a landmark set is searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Resolving,
    DoublyResolving,
}

impl Predicate {
    /// Smallest landmark set the predicate is defined for.
    pub fn min_size(self) -> usize {
        match self {
            Predicate::Resolving => 1,
            Predicate::DoublyResolving => 2,
        }
    }
}

/// Result of a minimum-cardinality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub cardinality: usize,
    /// Lexicographically first optimal set.
    pub best_set: Landmarks,
    /// Every optimal set in lexicographic order, when requested.
    pub all_optima: Option<Vec<Vec<usize>>>,
    /// Subsets tested, counted as a sequential lexicographic scan would.
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

fn check_index(dm: &DistanceMatrix, index: usize) -> Result<(), MetricError> {
    if index >= dm.dim() {
        return Err(MetricError::IndexOutOfRange {
            index,
            dim: dm.dim(),
        });
    }
    Ok(())
}

fn check_landmarks(dm: &DistanceMatrix, lm: &Landmarks, min: usize) -> Result<(), MetricError> {
    if lm.is_empty() {
        return Err(MetricError::EmptyLandmarks);
    }
    if lm.len() < min {
        return Err(MetricError::LandmarksTooSmall(lm.len()));
    }
    lm.elements.iter().try_for_each(|&x| check_index(dm, x))
}

pub fn representation(
    dm: &DistanceMatrix,
    element: usize,
    lm: &Landmarks,
) -> Result<Representation, MetricError> {
    check_index(dm, element)?;
    lm.elements.iter().try_for_each(|&x| check_index(dm, x))?;
    Ok(Representation {
        coords: lm.elements.iter().map(|&x| dm.get(element, x)).collect(),
    })
}

/// Reusable buffers for collision checks.
#[derive(Default)]
pub(crate) struct Scratch {
    keys: Vec<i64>,
    order: Vec<u32>,
}

/// Lexicographically first pair of elements sharing a key, where the key is
/// the representation (resolving) or the representation shifted by its first
/// coordinate (doubly resolving).
pub(crate) fn first_collision(
    dm: &DistanceMatrix,
    set: &[usize],
    predicate: Predicate,
    scratch: &mut Scratch,
) -> Option<(usize, usize)> {
    let n = dm.dim();
    let skip = match predicate {
        Predicate::Resolving => 0,
        Predicate::DoublyResolving => 1,
    };
    let width = set.len() - skip;
    scratch.keys.clear();
    scratch.keys.reserve(n * width);
    for u in 0..n {
        let row = dm.row(u);
        let shift = match predicate {
            Predicate::Resolving => 0,
            Predicate::DoublyResolving => i64::from(row[set[0]]),
        };
        scratch
            .keys
            .extend(set[skip..].iter().map(|&x| i64::from(row[x]) - shift));
    }
    if width == 0 {
        return (n >= 2).then_some((0, 1));
    }
    scratch.order.clear();
    scratch.order.extend(0..n as u32);
    let keys = &scratch.keys;
    let key = |u: u32| &keys[u as usize * width..(u as usize + 1) * width];
    // Stable: equal keys stay in ascending index order.
    scratch.order.sort_by(|&a, &b| key(a).cmp(key(b)));

    let mut best: Option<(usize, usize)> = None;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && key(scratch.order[j]) == key(scratch.order[i]) {
            j += 1;
        }
        if j - i >= 2 {
            let pair = (scratch.order[i] as usize, scratch.order[i + 1] as usize);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
        }
        i = j;
    }
    best
}

/// Checks that all elements have distinct representations. The witness is the
/// lexicographically first pair with equal representations.
pub fn is_resolving(dm: &DistanceMatrix, lm: &Landmarks) -> Result<ResolveReport, MetricError> {
    check_landmarks(dm, lm, 1)?;
    let witness = first_collision(
        dm,
        &lm.elements,
        Predicate::Resolving,
        &mut Scratch::default(),
    );
    Ok(ResolveReport::from_witness(witness))
}

/// Whether `x, y` doubly resolve `u, v`. Always false when `x == y`.
pub fn doubly_resolves(
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
    u: usize,
    v: usize,
) -> Result<bool, MetricError> {
    for i in [x, y, u, v] {
        check_index(dm, i)?;
    }
    let diff = |w: usize| i64::from(dm.get(w, x)) - i64::from(dm.get(w, y));
    Ok(diff(u) != diff(v))
}

/// Checks that every pair of elements is doubly resolved by two landmarks.
/// The witness is the lexicographically first pair that is not.
pub fn is_doubly_resolving(
    dm: &DistanceMatrix,
    lm: &Landmarks,
) -> Result<ResolveReport, MetricError> {
    check_landmarks(dm, lm, 2)?;
    let witness = first_collision(
        dm,
        &lm.elements,
        Predicate::DoublyResolving,
        &mut Scratch::default(),
    );
    Ok(ResolveReport::from_witness(witness))
}

/// Checks one pair directly against every landmark pair.
pub fn pair_doubly_resolved(
    dm: &DistanceMatrix,
    lm: &Landmarks,
    u: usize,
    v: usize,
) -> Result<bool, MetricError> {
    check_index(dm, u)?;
    check_index(dm, v)?;
    for (i, &x) in lm.elements.iter().enumerate() {
        for &y in &lm.elements[i + 1..] {
            if doubly_resolves(dm, x, y, u, v)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Runs `predicate` for `lm` and returns the report.
pub fn check(
    dm: &DistanceMatrix,
    lm: &Landmarks,
    predicate: Predicate,
) -> Result<ResolveReport, MetricError> {
    match predicate {
        Predicate::Resolving => is_resolving(dm, lm),
        Predicate::DoublyResolving => is_doubly_resolving(dm, lm),
    }
}

fn labels_to_landmarks(
    family: &LabeledFamilyGraph,
    labels: &[&str],
) -> Result<Landmarks, MetricError> {
    let elements = labels
        .iter()
        .map(|l| {
            family
                .line_index(l)
                .ok_or_else(|| MetricError::UnknownLabel(l.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Landmarks::edge(elements)
}

/// Runs the edge doubly-resolving check on a labeled candidate set.
pub fn check_labeled_set(
    family: &LabeledFamilyGraph,
    candidate: &[&str],
) -> Result<ResolveReport, MetricError> {
    let lm = labels_to_landmarks(family, candidate)?;
    is_doubly_resolving(family.graph.line_distances()?, &lm)
}

/// Whether the labeled pair `a, b` is edge doubly resolved by `candidate`.
pub fn labeled_pair_doubly_resolved(
    family: &LabeledFamilyGraph,
    candidate: &[&str],
    a: &str,
    b: &str,
) -> Result<bool, MetricError> {
    let lm = labels_to_landmarks(family, candidate)?;
    let index = |l: &str| {
        family
            .line_index(l)
            .ok_or_else(|| MetricError::UnknownLabel(l.to_string()))
    };
    pair_doubly_resolved(family.graph.line_distances()?, &lm, index(a)?, index(b)?)
}
