use alloc::string::String;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("invalid packing: {0}")]
    InvalidPacking(String),
    #[error(
        "packing is not maximal: vertex {vertex} lies in a leftover component of {size} vertices"
    )]
    NotMaximal { vertex: Vertex, size: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid crown decomposition: {0}")]
    InvalidCrown(String),
    #[error("duplicate endpoint {0} across endpoint pairs")]
    DuplicateEndpoint(Vertex),
    #[error(
        "no total edge cover exists: vertex {0} lies in a component with fewer than three vertices"
    )]
    NoTotalEdgeCover(Vertex),
    #[error("exact search refused: size {size} exceeds cap {cap}")]
    OracleRefused { size: usize, cap: usize },
    #[error("internal invariant failed: {0}")]
    Internal(String),
}
