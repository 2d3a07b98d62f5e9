use thiserror::Error;

/// Errors produced by the partition algebra library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for ground size {ground}")]
    VertexOutOfRange { vertex: usize, ground: usize },

    #[error("vertex {vertex} appears in more than one block")]
    OverlappingBlocks { vertex: usize },

    #[error("vertex {vertex} is not covered by any block")]
    MissingVertex { vertex: usize },

    #[error("invalid restricted-growth string: {0}")]
    InvalidRgs(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("tuple entry {value} at position {position} is outside 1..={bound}")]
    TupleEntry {
        position: usize,
        value: usize,
        bound: usize,
    },

    #[error("block {block} is isolated to the top row")]
    TopIsolatedBlock { block: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what}: requested {requested} exceeds budget {limit}")]
    Budget {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
