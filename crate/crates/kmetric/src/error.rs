use thiserror::Error;

/// Errors reported by graph construction and invariant computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("pair must consist of two distinct vertices")]
    SamePair,
    #[error("graph too small: need at least {need} vertices")]
    TooSmall { need: usize },
    #[error("radius {m} out of range (valid range {min}..={max})")]
    RadiusOutOfRange { m: usize, min: usize, max: usize },
    #[error("no major vertex with terminal degree greater than one")]
    EmptyM,
    #[error("vertices do not have equal {0}-boundary")]
    NotEqualBoundary(usize),
    #[error("not a block graph")]
    NotBlockGraph,
    #[error("elementary block graph (complete graph or path)")]
    Elementary,
    #[error("no candidate pairs on a non-elementary block graph; \
             this signals an interpretation bug, serialize the graph and report it")]
    EmptyE,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("sphere intersection too large for subset enumeration ({0} vertices)")]
    TooLarge(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
