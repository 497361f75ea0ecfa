use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected: vertices {0} and {1} are mutually unreachable")]
    Disconnected(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("landmark set must be non-empty")]
    EmptyLandmarks,

    #[error("exact invariant cap exceeded: {what} requires n <= {cap}, got n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("subset budget of {budget} exhausted before a resolving set was found; result inconclusive")]
    BudgetExhausted { budget: u64 },

    #[error("no leafless subgraph: the graph is a tree")]
    NoLeaflessSubgraph,

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("no closed form known for {family} with variant {variant}")]
    NoClosedForm { family: String, variant: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short machine-readable tag, used as the CLI error prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::LoopEdge { .. } => "loop-edge",
            Error::EmptyGraph => "empty-graph",
            Error::Disconnected(..) => "disconnected",
            Error::VertexOutOfRange { .. } => "vertex-range",
            Error::EmptyLandmarks => "empty-landmarks",
            Error::CapExceeded { .. } => "cap",
            Error::BudgetExhausted { .. } => "budget",
            Error::NoLeaflessSubgraph => "no-leafless-subgraph",
            Error::InvalidFamily(_) => "family",
            Error::NoClosedForm { .. } => "no-closed-form",
            Error::UnknownTheorem(_) => "theorem",
            Error::InvalidArgument(_) => "argument",
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
