//! Homology of simplicial, directed and embedded complexes.

pub mod chain;
pub mod compare;
pub mod embedded;
pub mod kunneth;
pub mod ladder;
pub mod maps;
pub mod mv;

pub use chain::{ChainComplex, Chains, SimplicialChains, SubmoduleComplex};
pub use compare::{sigma_invariant_comparison, universal_coefficients_check, SigmaComparison};
pub use embedded::{embedded_homology, inf_complex, sup_complex, DegreeGroup, EmbeddedHomology};
pub use kunneth::{kunneth, kunneth_ladder, kunneth_projection_ladder, KunnethReport};
pub use ladder::{homology_square, LadderReport, MvSquare, Row, SquareReport};
pub use maps::{chain_map_from_simplex_map, inclusion, projection_chain_map, sort_with_sign, vertex_map_chain_map, ChainMap};
pub use mv::{embedded_mayer_vietoris, mayer_vietoris, mayer_vietoris_projection_ladder, EmbeddedMvReport};
