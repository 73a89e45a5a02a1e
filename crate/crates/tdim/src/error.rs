//! One error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 128 vertices")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),

    #[error("edge-list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },

    #[error("graph6 parse error: {0}")]
    Graph6Parse(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("landmark list is empty")]
    EmptyLandmarks,

    #[error("landmark list contains a repeated vertex")]
    RepeatedLandmark,

    #[error("graph is not a tree")]
    NotATree,

    #[error("tree is a path; it has no major vertices")]
    PathTree,

    #[error("coordinate vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("embedding is not valid for this graph: {0}")]
    InvalidEmbedding(String),

    #[error("vertex set {0:?} does not resolve the graph")]
    NotResolving(Vec<usize>),

    #[error("required vertices do not fit any limb-based basis: {0}")]
    BasisQuota(String),

    #[error("refused: cap ({cap}) exceeded, search space has {size} complement edges")]
    CapExceeded { cap: usize, size: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("edge addition plan failed verification: {0}")]
    PlanVerification(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
