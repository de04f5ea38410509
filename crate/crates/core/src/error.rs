use thiserror::Error;

/// Errors raised by the digraph constructions and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop ({0},{0}) not allowed in a loopless digraph")]
    LoopNotAllowed(usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("matrix entry at ({row},{col}) is not 0 or 1")]
    NonBinaryMatrix { row: usize, col: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("digraph is not eulerian")]
    NotEulerian,
    #[error("digraph contains a directed cycle")]
    NotAcyclic,
    #[error("digraph has no arcs")]
    EmptyArcSet,
    #[error("size {size} exceeds the configured limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("digraph has loops; recognition is defined for loopless digraphs")]
    LoopsPresent,
    #[error("input of size {size} is too large (limit {limit})")]
    TooLarge { size: usize, limit: usize },
    #[error("digraph is not a line digraph")]
    NotLineDigraph,
    #[error("invalid in-split partition: {0}")]
    InvalidPartition(String),
    #[error("digraph is not regular")]
    NotRegular,
    #[error("subdigraph does not span the host: {0}")]
    NotSpanning(String),
    #[error("arc ({0},{1}) is not an arc of the host digraph")]
    NotSubdigraph(usize, usize),
    #[error("arc count {arcs} is below vertex count {vertices}")]
    ExponentNegative { arcs: usize, vertices: usize },
    #[error("Penrose condition ({0}) violated")]
    PenroseViolation(&'static str),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coin has zero entries")]
    CoinHasZeros,
    #[error("bad generators: {0}")]
    BadGenerators(String),
    #[error("group order parameter {0} must be odd")]
    BadOrder(usize),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Short variant name, used on the CLI's diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::LoopNotAllowed(_) => "LoopNotAllowed",
            Error::DuplicateArc(..) => "DuplicateArc",
            Error::NonBinaryMatrix { .. } => "NonBinaryMatrix",
            Error::NotSquare { .. } => "NotSquare",
            Error::NotEulerian => "NotEulerian",
            Error::NotAcyclic => "NotAcyclic",
            Error::EmptyArcSet => "EmptyArcSet",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::LoopsPresent => "LoopsPresent",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotLineDigraph => "NotLineDigraph",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::NotRegular => "NotRegular",
            Error::NotSpanning(_) => "NotSpanning",
            Error::NotSubdigraph(..) => "NotSubdigraph",
            Error::ExponentNegative { .. } => "ExponentNegative",
            Error::PenroseViolation(_) => "PenroseViolation",
            Error::BadDimension(_) => "BadDimension",
            Error::NotUnitary(_) => "NotUnitary",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::CoinHasZeros => "CoinHasZeros",
            Error::BadGenerators(_) => "BadGenerators",
            Error::BadOrder(_) => "BadOrder",
            Error::InvalidFactorization(_) => "InvalidFactorization",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
