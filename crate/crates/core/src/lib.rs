//! Independence complexes, embedded homology of hyper(di)graphs, vectorial
//! matroids and k-regular embedding obstructions, all over exact rings.

pub mod error;
pub mod graph;
pub mod hyper;
pub mod io;
pub mod homology;
pub mod linalg;
pub mod matroid;
pub mod obstruction;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hyper::{DirectedHyperedge, Hyperdigraph, Hyperedge, Hypergraph, VertexId};
pub use linalg::{FgAbGroup, Fp, Integer, Rational, RingKind};
pub use matroid::{DirectedMatroid, DirectedMode, Matroid, VectorSet};

pub type IntMatrix = linalg::Matrix<Integer>;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type FpMatrix = linalg::Matrix<Fp>;
