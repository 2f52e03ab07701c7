use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),

    #[error("edge {0}-{1} has non-positive length")]
    NonPositiveLength(usize, usize),

    #[error("total edge length exceeds the distance accumulator range")]
    LengthOverflow,

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("a path needs at least one vertex")]
    EmptyPath,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not connected")]
    Disconnected,

    #[error("source and target must differ (both are {0})")]
    SameTerminals(usize),

    #[error("source vertex {0} is forbidden")]
    ForbiddenSource(usize),

    #[error("oracle refused a graph with {vertices} vertices (cap {cap})")]
    OracleCap { vertices: usize, cap: usize },

    #[error("brute-force SAT refused {vars} variables (cap {cap})")]
    SatCap { vars: usize, cap: usize },

    #[error("clause {clause} mentions variable {var} more than once")]
    RepeatedVariable { clause: usize, var: usize },

    #[error("clause {clause} refers to variable {var} but the formula has {num_vars}")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },

    #[error("path is not a lane path of the reduced instance: {0}")]
    NotLanePath(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
