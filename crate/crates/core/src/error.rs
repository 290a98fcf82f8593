use thiserror::Error;

/// Errors raised by graph construction, the oracles and the formula modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} requires at least {min} vertices, got {n}")]
    TooSmall { what: &'static str, min: usize, n: usize },

    #[error("graph on {n} vertices exceeds the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("malformed reduced degree sequence: {0}")]
    MalformedSequence(String),

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("order is not a unit interval order: closed neighborhood of vertex {0} is not consecutive")]
    NotUnitIntervalOrder(usize),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("special segment [{lo}, {hi}] matched {matched} t(H) cases")]
    SegmentCase { lo: usize, hi: usize, matched: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
