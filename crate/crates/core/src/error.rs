use thiserror::Error;

/// Errors reported by graph construction, parsing and the analyses built on top.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}: multigraphs are loopless")]
    Loop(usize),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range ({m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("multiplicity {multiplicity} between {u} and {v} exceeds the cap of {cap}")]
    MultiplicityCap {
        u: usize,
        v: usize,
        multiplicity: usize,
        cap: usize,
    },
    #[error("vertex {vertex} has degree {degree} > 3")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("graph has {n} vertices, exceeding the size guard of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("girth bound needs g >= 3, got {0}")]
    GirthTooSmall(usize),
    #[error("graph6 requires a simple graph; vertices {0} and {1} are joined by parallel edges")]
    NotSimple(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coloring covers {len} edges but the graph has {m}")]
    ColoringSize { len: usize, m: usize },
    #[error("coloring is partial: edge {0} has no color")]
    PartialColoring(usize),
    #[error("color {color} on edge {edge} is outside 1..={k}")]
    ColorOutOfRange { edge: usize, color: u32, k: u32 },
    #[error("ledger does not belong to this graph: {0}")]
    LedgerMismatch(String),
    #[error("cache I/O: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
