use thiserror::Error;

/// Errors raised by graph construction, verification, theorem evaluation and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices {0} and {1} are not connected")]
    DisconnectedPair(usize, usize),
    #[error("endpoints must be distinct (got {0} twice)")]
    SameEndpoints(usize),
    #[error("graph has {order} vertices, the limit for this operation is {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("k = {k} is outside 1..={connectivity}")]
    InvalidK { k: usize, connectivity: usize },
    #[error("search budget of {0} nodes exhausted before a verdict")]
    BudgetExceeded(u64),
    #[error("no feasible coloring with at most {0} colors")]
    PaletteExhausted(u32),
    #[error("not a simple path: {0}")]
    NotAPath(String),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("color 0 at vertex {0}; colors start at 1")]
    InvalidColor(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
