use thiserror::Error;

/// Errors raised while building or querying a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("{family} requires parameter >= {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("invalid label table: {0}")]
    InvalidLabels(String),
    #[error("invalid graph specifier `{0}`")]
    InvalidSpec(String),
    #[error("graph JSON: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

/// Errors raised by the resolving-set predicates and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("landmark set is empty")]
    EmptyLandmarks,
    #[error("doubly resolving checks need at least 2 landmarks, got {0}")]
    LandmarksTooSmall(usize),
    #[error("landmark {0} appears more than once")]
    DuplicateLandmark(usize),
    #[error("search start size {got} is below the minimum {min} for this predicate")]
    InvalidStart { got: usize, min: usize },
    #[error("search budget of {budget} subsets exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the closed-form distance model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family} closed form is not defined for n = {n}")]
    UnsupportedParameter { family: &'static str, n: usize },
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("closed form produced negative distance {value} for ({a}, {b})")]
    NegativeDistance { a: String, b: String, value: i64 },
    #[error("base table assigns conflicting distances to {0}")]
    ConflictingBase(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
