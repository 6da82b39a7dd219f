use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    MultiEdge(usize, usize),
    #[error("vertex {vertex} out of range (graph has {order} vertices)")]
    UnknownVertex { vertex: usize, order: usize },
    #[error("edge {edge} out of range (graph has {size} edges)")]
    UnknownEdge { edge: usize, size: usize },
    #[error("no edge between {0} and {1}")]
    NotAnEdge(usize, usize),
    #[error("vertex set to delete must be a proper subset of the vertices")]
    NotProperSubset,
    #[error("vertex {vertex} has valence {valence}, at most 3 allowed")]
    ValenceTooHigh { vertex: usize, valence: usize },
    #[error("graph has no trivalent vertex")]
    NoTrivalentVertex,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is cubic; operation needs pendant edges")]
    IsCubic,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no pair of disjoint cycles; cyclic edge connectivity is undefined")]
    NoDisjointCycles,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("graph is not edge-3-colorable")]
    Uncolorable,
    #[error("edges {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("edge {edge} is not colored {x} or {y}")]
    WrongChainColor { edge: usize, x: char, y: char },
    #[error("Kempe chain does not belong to this coloring")]
    StaleChain,
    #[error("vertices do not form a {0}-cycle of the graph")]
    NotACycle(usize),
    #[error("coloring count {count} is not divisible by {divisor}")]
    Divisibility { count: u64, divisor: u64 },
    #[error("integer overflow while combining counts")]
    Overflow,
    #[error("search budget of {nodes} backtracking nodes exhausted")]
    Budget { nodes: u64 },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("ledger record {id} is corrupt: {message}")]
    LedgerCorrupt { id: u64, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn hypothesis(message: impl Into<String>) -> Self {
        Error::Hypothesis(message.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
