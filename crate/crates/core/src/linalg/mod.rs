//! Exact linear algebra over Z, Q and GF(p).

pub mod group;
pub mod hom;
pub mod lattice;
pub mod matrix;
pub mod scalar;
pub mod snf;

pub use group::{tensor_fgab, tor_fgab, FgAbGroup};
pub use hom::{homology_group_of_pair, homology_of_pair, is_exact_at, GroupHom, HomologyPresentation, Presentation};
pub use lattice::{column_hermite, kernel_basis, solve_in_lattice, LatticeSolver};
pub use matrix::Matrix;
pub use scalar::{Fp, Integer, Rational, Ring, RingKind, Scalar};
pub use snf::{invariant_factors, rank, smith, Snf, SnfDecomposition};

use crate::error::{Error, Result};

/// A matrix whose scalar kind is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactMatrix {
    Integer(Matrix<Integer>),
    Rational(Matrix<Rational>),
    Residue(Matrix<Fp>, u64),
}

impl ExactMatrix {
    pub fn kind(&self) -> RingKind {
        match self {
            ExactMatrix::Integer(_) => RingKind::Integers,
            ExactMatrix::Rational(_) => RingKind::Rationals,
            ExactMatrix::Residue(_, p) => RingKind::Prime(*p),
        }
    }
}

/// `U·M·V = D` for an integer matrix; other kinds are rejected.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<SnfDecomposition> {
    match m {
        ExactMatrix::Integer(m) => Ok(smith(m)),
        other => Err(Error::KindMismatch(other.kind())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_rejects_rationals() {
        let m = ExactMatrix::Rational(Matrix::identity(2));
        assert!(matches!(smith_normal_form(&m), Err(Error::KindMismatch(RingKind::Rationals))));
        let m = ExactMatrix::Integer(Matrix::identity(2));
        assert_eq!(smith_normal_form(&m).unwrap().diag.len(), 2);
    }
}
