use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Errors raised when an operation's input does not satisfy its precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0} appears more than once")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("graph is not connected")]
    Disconnected,
    #[error("parity target has an odd number of ones")]
    OddSum,
    #[error("parity target has odd sum on the component containing vertex {0}")]
    OddSumComponent(Vertex),
    #[error("parity target covers {got} vertices but the graph has {expected}")]
    TargetLength { expected: usize, got: usize },
    #[error("graph has odd order {0}")]
    OddOrder(usize),
    #[error("graph has even order {0}")]
    EvenOrder(usize),
    #[error("graph of order {0} is too small")]
    TooSmall(usize),
    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(Vertex),
    #[error("weights cover {got} edges but the graph has {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance exceeds the brute-force limit: {0}")]
    CapExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
