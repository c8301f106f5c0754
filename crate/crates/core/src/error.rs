use thiserror::Error;

use crate::linalg::RingKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation needs an integer matrix, got scalars over {0}")]
    KindMismatch(RingKind),
    #[error("boundary composition is nonzero at degree {0}")]
    NotAComplex(i64),
    #[error("homomorphism is not well defined on source generator {0}")]
    IllDefinedHom(usize),
    #[error("vector is not a cycle")]
    NotACycle,
    #[error("chain map does not commute with boundaries at degree {0}")]
    NotAChainMap(i64),
    #[error("chain map target does not contain the image at degree {0}")]
    ImageOutsideTarget(i64),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(u32),
    #[error("hyperedge repeats vertex {0}")]
    RepeatedVertex(u32),
    #[error("hyperedges must be non-empty")]
    EmptyEdge,
    #[error("hyperedge of size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("{0}")]
    OutOfRange(String),
    #[error("not a simplicial complex: face {0:?} is missing")]
    NotSimplicial(Vec<u32>),
    #[error("unknown label {0}")]
    UnknownLabel(u32),
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("enumeration cap {cap} is below the rank; duals need full enumeration")]
    CapTooSmall { cap: usize },
    #[error("embedded homology mismatch at degree {degree}: Inf gives {inf}, Sup gives {sup}")]
    EmbeddedMismatch { degree: i64, inf: String, sup: String },
    #[error("map is not {k}-regular; independent set {witness:?} is not sent to an independent set")]
    NotRegular { k: usize, witness: Vec<u32> },
    #[error("complex is not the underlying complex of the directed one")]
    UnderlyingMismatch,
    #[error("directed complex is not invariant under reordering")]
    NotSigmaInvariant,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
