use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("graph order {0} exceeds the supported maximum of {1}")]
    OrderTooLarge(usize, usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("no connected subgraph of order {0}")]
    NoConnectedSubgraph(usize),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("no D_{0}-cycle exists")]
    NoQualifyingCycle(usize),
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("vertex {0} already lies on the cycle")]
    AlreadyOnCycle(usize),
    #[error("({0}, {1}) is not a chord of the cycle")]
    NotAChord(usize, usize),
    #[error("chords share the endpoint {0}")]
    SharedEndpoint(usize),
    #[error("no edge joins {0} and {1}")]
    NonEdgeJunction(usize, usize),
    #[error("vertex {0} is visited twice")]
    RepeatedVertex(usize),
    #[error("vertex {0} of the external path lies on the cycle")]
    PathTouchesCycle(usize),
    #[error("vertices {0:?} are not in the required cyclic order")]
    OrderViolated(Vec<usize>),

    #[error("unknown condition id `{0}`")]
    UnknownCondition(String),
    #[error("condition requires n >= 3, got {0}")]
    OrderBelowThree(usize),
}
