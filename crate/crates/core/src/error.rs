use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("operation needs at least one edge")]
    EmptyEdgeSet,
    #[error("{what}: input has {actual}, limit is {limit} (raise with BCX_MAX_EDGES at your own risk)")]
    SizeBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("graph is not a block")]
    NotABlock,
    #[error("graph is not series-parallel")]
    NotSeriesParallel,
    #[error("graph has loops")]
    LoopsPresent,
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph is not connected")]
    NotConnected,
    #[error("integer overflow in exact arithmetic; rerun in wide-integer mode (--wide / h_poly_wide)")]
    Overflow,
    #[error("polynomial is not divisible by x")]
    NotDivisibleByX,
    #[error("invalid ear decomposition: {0}")]
    MalformedEars(String),
    #[error("ear decomposition is not nested")]
    NotNested,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("edge ordering does not cover the graph's edges")]
    BadOrdering,
    #[error("generator bound exceeded: {what} = {actual} > {limit}")]
    GeneratorBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
