use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("I/O error: {0}")]
    Write(#[from] std::io::Error),

    #[error("malformed MatrixMarket header: {0}")]
    MalformedHeader(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex index {index} outside declared range 1..={max}")]
    IndexOutOfRange { line: usize, index: i64, max: usize },

    #[error("line {line}: edge weight {weight} must be positive and finite")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("reciprocal arcs ({u}, {v}) carry different weights {forward} and {backward}")]
    AsymmetricWeights {
        u: u32,
        v: u32,
        forward: f64,
        backward: f64,
    },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has zero total edge weight; modularity is undefined")]
    ZeroTotalWeight,

    #[error("community labels are not contiguous: label {label} >= community count {count}")]
    NonContiguousLabels { label: u32, count: usize },

    #[error("label {label} at position {index} is out of range (limit {limit})")]
    LabelOutOfRange {
        index: usize,
        label: u64,
        limit: usize,
    },

    #[error("membership has {found} entries but graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("failed to build worker pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}
