use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("vertices coincide: {0}")]
    SameVertex(usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph has no edges")]
    NoEdges,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("idleness {0} outside [0, 1]")]
    AlphaOutOfRange(String),

    #[error("measures put mass on vertices at infinite distance")]
    InfiniteDistance,

    #[error("total masses differ: {0} vs {1}")]
    MassMismatch(String, String),

    #[error("degrees differ ({0} vs {1}); equal-degree fastpath does not apply")]
    DegreeMismatch(usize, usize),

    #[error("assignment instance is not square ({0} x {1})")]
    NonSquareInstance(usize, usize),

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("infeasible random graph parameters: n = {n}, delta_min = {delta_min}")]
    Infeasible { n: usize, delta_min: usize },

    #[error("idleness function did not converge within the denominator bound on [{0}, {1}]")]
    IdlenessConvergence(String, String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
