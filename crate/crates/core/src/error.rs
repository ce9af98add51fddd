use thiserror::Error;

/// Errors produced by graph construction and the orientation machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge reference {index} out of range (graph has {len} edges)")]
    InvalidEdgeRef { index: usize, len: usize },
    #[error("{{{u},{v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has loops or parallel edges")]
    NotSimple,
    #[error("expected {expected} orientation bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("malformed orientation bits {0:?}")]
    InvalidBits(String),
    #[error("orientation is not acyclic")]
    NotAcyclic,
    #[error("vertex {vertex} is not a source")]
    NotASource { vertex: usize },
    #[error("click {index} (vertex {vertex}) is not a source")]
    IllegalClick { index: usize, vertex: usize },
    #[error("not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("{edges} edges exceeds the enumeration cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("edge {{{u},{v}}} is a bridge")]
    Bridge { u: usize, v: usize },
    #[error("edge {{{v},{w}}} is oriented {w}->{v}; expected {v}->{w}")]
    WrongDirection { v: usize, w: usize },
    #[error("interval is empty")]
    EmptyInterval,
    #[error("orientations belong to different graphs")]
    GraphMismatch,
    #[error("contracted orientation is inconsistent on parallel edges")]
    InconsistentContraction,
    #[error("click sequence cannot be split into contiguous interval blocks")]
    NotNormalizable,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("malformed Coxeter word: {0}")]
    InvalidWord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
