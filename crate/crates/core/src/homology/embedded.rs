//! Inf and Sup chain complexes of a hyper(di)graph and embedded homology.

use std::collections::HashSet;

use serde::Serialize;

use super::chain::{Chains, Simplex, SimplicialChains, SubmoduleComplex};
use crate::error::{Error, Result};
use crate::hyper::{Edge, Graded};
use crate::linalg::{column_hermite, kernel_basis, FgAbGroup, Matrix, Ring};

fn edge_set<E: Edge>(h: &Graded<E>) -> HashSet<Simplex> {
    h.edges().map(|e| e.vertices().to_vec()).collect()
}

/// Coordinate positions of `H`'s edges among the ambient generators of
/// degree `n` (the empty simplex counts as part of `H`).
fn h_positions<T: Ring>(amb: &SimplicialChains<T>, hs: &HashSet<Simplex>, n: i64) -> (Vec<usize>, Vec<usize>) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for (i, s) in amb.generators(n).iter().enumerate() {
        if s.is_empty() || hs.contains(s) {
            inside.push(i);
        } else {
            outside.push(i);
        }
    }
    (inside, outside)
}

fn coordinate_inclusion<T: Ring>(rows: usize, idx: &[usize]) -> Matrix<T> {
    Matrix::from_triplets(rows, idx.len(), idx.iter().enumerate().map(|(j, &i)| (i, j, T::one())).collect())
}

/// Largest subcomplex inside the span of `H`:
/// `Inf_n = {x ∈ R(H_n) : ∂x ∈ R(H_{n−1})}`.
pub fn inf_complex<E: Edge, T: Ring>(h: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<SubmoduleComplex<T>> {
    let amb = SimplicialChains::<T>::new(&h.delta_closure(), augmented, ctx)?;
    let hs = edge_set(h);
    let c = &amb.complex;
    let bases = c
        .degrees()
        .map(|n| {
            let (inside, _) = h_positions(&amb, &hs, n);
            let (_, below_out) = h_positions(&amb, &hs, n - 1);
            let e = coordinate_inclusion::<T>(c.rank(n), &inside);
            if below_out.is_empty() || inside.is_empty() {
                return e;
            }
            let m = c.boundary(n).select_rows(&below_out).select_columns(&inside);
            let k = kernel_basis(&m);
            if k.cols() == 0 {
                Matrix::zeros(c.rank(n), 0)
            } else {
                e.mul(&k)
            }
        })
        .collect();
    SubmoduleComplex::new(amb, bases)
}

/// Smallest subcomplex containing the span of `H`:
/// `Sup_n = R(H_n) + ∂R(H_{n+1})`, with a Hermite basis.
pub fn sup_complex<E: Edge, T: Ring>(h: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<SubmoduleComplex<T>> {
    let amb = SimplicialChains::<T>::new(&h.delta_closure(), augmented, ctx)?;
    let hs = edge_set(h);
    let c = &amb.complex;
    let bases = c
        .degrees()
        .map(|n| {
            let (inside, _) = h_positions(&amb, &hs, n);
            let (above, _) = h_positions(&amb, &hs, n + 1);
            let mut gens = coordinate_inclusion::<T>(c.rank(n), &inside);
            if !above.is_empty() {
                let d = c.boundary(n + 1).select_columns(&above);
                gens = gens.hstack(&d);
            }
            let b = column_hermite(&gens);
            if b.cols() == 0 {
                Matrix::zeros(c.rank(n), 0)
            } else {
                b
            }
        })
        .collect();
    SubmoduleComplex::new(amb, bases)
}

/// Degreewise homology of a complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeGroup {
    pub n: i64,
    #[serde(flatten)]
    pub group: FgAbGroup,
}

/// Embedded homology with the agreement certificate of Inf and Sup.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddedHomology {
    pub degrees: Vec<DegreeGroup>,
    pub inf: Vec<DegreeGroup>,
    pub sup: Vec<DegreeGroup>,
    pub quasi_isomorphic: bool,
}

pub fn homology_table<T: Ring, C: Chains<T> + ?Sized>(c: &C) -> Vec<DegreeGroup> {
    c.complex().homology().into_iter().map(|(n, group)| DegreeGroup { n, group }).collect()
}

/// Homology of Inf and of Sup, computed independently; disagreement in
/// any degree is an error.
pub fn embedded_homology<E: Edge, T: Ring>(h: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<EmbeddedHomology> {
    let inf = homology_table(&inf_complex::<E, T>(h, augmented, ctx)?);
    let sup = homology_table(&sup_complex::<E, T>(h, augmented, ctx)?);
    debug_assert_eq!(inf.len(), sup.len());
    for (a, b) in inf.iter().zip(&sup) {
        if a.group != b.group {
            return Err(Error::EmbeddedMismatch { degree: a.n, inf: a.group.to_string(), sup: b.group.to_string() });
        }
    }
    Ok(EmbeddedHomology { degrees: inf.clone(), inf, sup, quasi_isomorphic: true })
}

/// Checks `Inf_n ⊆ R(H_n) ⊆ Sup_n` degreewise.
pub fn check_sandwich<E: Edge, T: Ring>(h: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<bool> {
    let inf = inf_complex::<E, T>(h, augmented, ctx)?;
    let sup = sup_complex::<E, T>(h, augmented, ctx)?;
    let hs = edge_set(h);
    let amb = &inf.ambient;
    for n in amb.complex.degrees() {
        let (inside, outside) = h_positions(amb, &hs, n);
        let b = inf.basis_matrix(n);
        if b.cols() > 0 && !b.select_rows(&outside).is_zero() {
            return Ok(false);
        }
        let s = sup.basis_matrix(n);
        let e = coordinate_inclusion::<T>(amb.complex.rank(n), &inside);
        if e.cols() > 0 && crate::linalg::LatticeSolver::new(s).solve_matrix(&e).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
