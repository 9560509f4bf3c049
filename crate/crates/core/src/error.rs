use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertices {0} and {1} are unreachable from each other")]
    Unreachable(Vertex, Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set is not gated from vertex {0}")]
    NotGated(Vertex),
    #[error("maximum cycle length must be at least 4, got {0}")]
    CycleCapTooSmall(usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("unknown hyperplane id {0}")]
    UnknownHyperplane(usize),
    #[error("hyperplanes are identical")]
    IdenticalHyperplanes,
    #[error("hyperplanes {0} and {1} are not transverse")]
    NotTransverse(usize, usize),
    #[error("angle between hyperplanes {first} and {second} depends on the cycle: {found} vs {expected}")]
    AngleDisagreement {
        first: usize,
        second: usize,
        found: String,
        expected: String,
    },
    #[error("angle {0} is not of the form pi/m")]
    NonIntegralLambda(String),
    #[error("malformed graph input: {0}")]
    Parse(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
