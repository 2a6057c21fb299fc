use thiserror::Error;

use crate::graph::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop {0}")]
    SelfLoop(Edge),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {edge} has an endpoint outside [0, {n})")]
    OutOfRange { edge: Edge, n: usize },
    #[error("vertex {v} outside [0, {n})")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("edge not present: {0}")]
    EdgeNotPresent(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("line {line}: malformed line {content:?}, expected two decimals separated by one space")]
    Malformed { line: usize, content: String },
    #[error("line {line}: edge count mismatch, header declares {declared} but found {found}")]
    EdgeCountMismatch {
        declared: usize,
        found: usize,
        line: usize,
    },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Violated preconditions of the connectivity and algorithm routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("input is not strongly connected")]
    NotStronglyConnected,
    #[error("input needs at least {needed} vertices, got {got}")]
    TooSmall { needed: usize, got: usize },
    #[error("input is not 2-vertex connected")]
    Not2VertexConnected,
    #[error("input is not 2-vertex strongly biconnected")]
    Not2vStronglyBiconnected,
    #[error("vertex {0} has in-degree or out-degree 0")]
    DegreeZero(VertexId),
    #[error("vertex {0} is unreachable from the root")]
    Unreachable(VertexId),
    #[error("vertices must be distinct and in range, got {0} and {1}")]
    BadPair(VertexId, VertexId),
    #[error("repair stalled: no candidate edge removes b-articulation point {0}")]
    RepairStalled(VertexId),
    #[error("{m} edges exceeds the exact-search limit of {limit}")]
    TooManyEdges { m: usize, limit: usize },
    #[error("n must be >= 4, got {0}")]
    GeneratorSize(usize),
    #[error("rng_below called with k = 0")]
    EmptyRange,
}
