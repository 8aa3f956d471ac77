use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex} (only simple graphs are supported)")]
    SelfLoop { line: usize, vertex: u64 },

    #[error("edge ({0}, {1}) is a self-loop")]
    LoopEdge(usize, usize),

    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edge ({0}, {1}) is a bridge; removing it disconnects the graph")]
    Bridge(usize, usize),

    #[error("graph contains a cycle")]
    HasCycle,

    #[error("{0}")]
    InvalidTree(String),

    #[error("vector length {got} does not match operator dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what} of size {size} exceeds the dense cap {cap}; use the matrix-free path")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("generator failed: {0}")]
    Generation(String),

    #[error("no interior threshold signal: {0}")]
    FlatCurve(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
