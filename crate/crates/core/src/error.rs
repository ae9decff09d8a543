use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("expected {expected} rooted trees for the cycle, got {got}")]
    TreeCount { expected: usize, got: usize },
    #[error("attached graph {index} is not a tree")]
    NotATree { index: usize },

    #[error("graph is not a tree")]
    RequiresTree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("girth is {found}, expected {expected}")]
    WrongGirth { expected: usize, found: usize },

    #[error("component count {k} outside 1..={n}")]
    ComponentCountOutOfRange { k: usize, n: usize },
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{0}-{1} is not a cut edge")]
    NotCutEdge(usize, usize),
    #[error("degree condition violated: {0}")]
    DegreeCondition(String),
    #[error("no pendant path attached at vertex {0}")]
    NoPendantPath(usize),
    #[error("vertex {leaf} does not end a pendant path at {at}")]
    NotPendantLeaf { at: usize, leaf: usize },
    #[error("pendant path lengths out of order: p = {p} < q = {q}")]
    PathOrder { p: usize, q: usize },
    #[error("reduction made no progress on a graph that is not yet reduced")]
    ReductionStuck,

    #[error("coefficient vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("family is empty")]
    EmptyFamily,
    #[error("invalid probe parameters: {0}")]
    InvalidProbe(String),

    #[error("graph file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
