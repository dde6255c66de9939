use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {0} is outside the supported range 1..={max}", max = crate::graph::MAX_ORDER)]
    OrderOutOfRange(usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) must be listed with u < v")]
    UnorderedEdge(usize, usize),

    #[error(
        "vertex {0} belongs to the candidate set; traces are defined for outside vertices only"
    )]
    VertexInSet(usize),

    #[error("map has length {map} but the base graph has order {graph}")]
    OrderMismatch { map: usize, graph: usize },

    #[error("base graph is disconnected")]
    Disconnected,

    #[error("map target {target} at position {position} is out of range for order {order}")]
    TargetOutOfRange {
        position: usize,
        target: usize,
        order: usize,
    },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("order {order} exceeds the oracle guard of {guard}")]
    OracleGuard { order: usize, guard: usize },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
