//! Resolving sets, doubly resolving sets and their edge versions.
//!
//! The edge version of every notion is the vertex version evaluated on the
//! line graph: the edge distance between two edges is their distance as
//! vertices of `L(G)`. [`Graph`] caches both distance matrices, and every
//! predicate and search in [`metric`] runs on a [`DistanceMatrix`], so the
//! same code serves both versions.

pub mod closed_form;
pub mod distance;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod line_graph;
pub mod metric;

pub use distance::{all_pairs_distances, DistanceMatrix};
pub use error::{ClosedFormError, GraphError, MetricError};
pub use generators::{
    cartesian_product, make_cycle, make_generalized_petersen, make_path, make_prism, make_sunlet,
    EdgeLabels, FamilyTag, GraphSpec, LabeledFamilyGraph,
};
pub use graph::{BuildMode, Edge, Graph};
pub use line_graph::{line_graph, LineGraphMap};
