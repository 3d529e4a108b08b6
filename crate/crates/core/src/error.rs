use thiserror::Error;

use crate::config::Move;
use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("{0}")]
    Domain(String),
}

/// A move that cannot be applied to a configuration.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("{mv}: no token on vertex {vertex}")]
    MissingToken { mv: Move, vertex: Vertex },
    #[error("{mv}: {u}-{v} is not an edge")]
    MissingEdge { mv: Move, u: Vertex, v: Vertex },
    #[error("{mv}: vertex {vertex} out of range (graph has {n} vertices)")]
    BadVertex { mv: Move, vertex: Vertex, n: usize },
    #[error("{mv}: source and destination coincide")]
    Degenerate { mv: Move },
}
