//! Chain maps induced by simplex maps, and the maps they induce on homology.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::chain::{ChainComplex, Chains, Simplex};
use crate::error::{Error, Result};
use crate::hyper::VertexId;
use crate::linalg::{GroupHom, HomologyPresentation, LatticeSolver, Matrix, Ring};

/// Degreewise matrices `f_n : C_n → C'_n` in the (sub)complex bases.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMap<T> {
    min_degree: i64,
    matrices: Vec<Matrix<T>>,
}

impl<T: Ring> ChainMap<T> {
    pub fn new(min_degree: i64, matrices: Vec<Matrix<T>>) -> Self {
        ChainMap { min_degree, matrices }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn top_degree(&self) -> i64 {
        self.min_degree + self.matrices.len() as i64 - 1
    }

    /// `f_n`, or `None` outside the stored range (meaning a zero map).
    pub fn matrix(&self, n: i64) -> Option<&Matrix<T>> {
        let i = n - self.min_degree;
        (i >= 0 && (i as usize) < self.matrices.len()).then(|| &self.matrices[i as usize])
    }

    pub fn apply(&self, n: i64, x: &[T], target_rank: usize) -> Vec<T> {
        match self.matrix(n) {
            Some(m) if m.cols() > 0 && m.rows() > 0 => m.mul_vec(x),
            _ => vec![T::zero(); target_rank],
        }
    }

    /// `∂' f_n = f_{n−1} ∂` in every degree.
    pub fn check(&self, source: &ChainComplex<T>, target: &ChainComplex<T>) -> Result<()> {
        for n in source.degrees() {
            let f_n = self.dense(n, source, target);
            let f_n1 = self.dense(n - 1, source, target);
            let lhs = mul_or_zero(&target.boundary(n), &f_n);
            let rhs = mul_or_zero(&f_n1, &source.boundary(n));
            if lhs != rhs {
                return Err(Error::NotAChainMap(n));
            }
        }
        Ok(())
    }

    fn dense(&self, n: i64, source: &ChainComplex<T>, target: &ChainComplex<T>) -> Matrix<T> {
        self.matrix(n).cloned().unwrap_or_else(|| Matrix::zeros(target.rank(n), source.rank(n)))
    }

    /// The induced map `H_n(C) → H_n(C')` between given presentations.
    pub fn induced_at(
        &self,
        n: i64,
        source: &HomologyPresentation<T>,
        target: &HomologyPresentation<T>,
    ) -> Result<GroupHom<T>> {
        let cols = (0..source.num_generators())
            .map(|g| target.coords(&self.apply(n, &source.representative(g), target.ambient_dim())))
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_columns(&cols, target.num_generators());
        GroupHom::new(source.presentation.clone(), target.presentation.clone(), m)
    }

    /// Induced maps in every degree of the source complex.
    pub fn induced(&self, source: &ChainComplex<T>, target: &ChainComplex<T>) -> Result<Vec<(i64, GroupHom<T>)>> {
        self.check(source, target)?;
        let degs: Vec<i64> = source.degrees().collect();
        degs.par_iter()
            .map(|&n| {
                let s = source.homology_presentation(n);
                let t = target.homology_presentation(n);
                Ok((n, self.induced_at(n, &s, &t)?))
            })
            .collect()
    }

    pub fn then(&self, after: &ChainMap<T>) -> ChainMap<T> {
        let matrices = (0..self.matrices.len())
            .map(|i| {
                let n = self.min_degree + i as i64;
                let f = &self.matrices[i];
                match after.matrix(n) {
                    Some(g) => mul_or_zero(g, f),
                    None => Matrix::zeros(0, f.cols()),
                }
            })
            .collect();
        ChainMap { min_degree: self.min_degree, matrices }
    }
}

pub(crate) fn mul_or_zero<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    if a.rows() == 0 || a.cols() == 0 || b.cols() == 0 {
        Matrix::zeros(a.rows(), b.cols())
    } else {
        a.mul(b)
    }
}

/// Sorts a vertex list and returns the sign of the sorting permutation.
pub fn sort_with_sign(v: &[VertexId]) -> (i64, Simplex) {
    let mut w = v.to_vec();
    let mut sign = 1;
    // insertion sort counting transpositions
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (sign, w)
}

/// Chain map from a rule sending each source simplex to `±` a target
/// simplex or to zero. Images must be target generators.
pub fn chain_map_from_simplex_map<T, S, U, F>(source: &S, target: &U, f: F) -> Result<ChainMap<T>>
where
    T: Ring,
    S: Chains<T> + ?Sized,
    U: Chains<T> + ?Sized,
    F: Fn(&[VertexId]) -> Option<(i64, Simplex)> + Sync,
{
    let src = source.complex();
    let ctx = source.ambient().ctx();
    let degs: Vec<i64> = src.degrees().collect();
    let matrices = degs
        .par_iter()
        .map(|&n| {
            let amb_src = source.ambient();
            let amb_tgt = target.ambient();
            let gens = amb_src.generators(n);
            let mut trip = Vec::new();
            for (j, s) in gens.iter().enumerate() {
                if let Some((sign, t)) = f(s) {
                    let i = amb_tgt.index_of(&t).ok_or(Error::ImageOutsideTarget(n))?;
                    trip.push((i, j, T::embed(sign, ctx)));
                }
            }
            let ambient = Matrix::from_triplets(amb_tgt.complex.rank(n), gens.len(), trip);
            let on_basis = match source.basis(n) {
                Some(b) => mul_or_zero(&ambient, b),
                None => ambient,
            };
            match target.basis(n) {
                None => Ok(on_basis),
                Some(b) if b.cols() == 0 => {
                    if on_basis.is_zero() {
                        Ok(Matrix::zeros(0, on_basis.cols()))
                    } else {
                        Err(Error::ImageOutsideTarget(n))
                    }
                }
                Some(b) => LatticeSolver::new(b).solve_matrix(&on_basis).ok_or(Error::ImageOutsideTarget(n)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let map = ChainMap::new(src.min_degree(), matrices);
    map.check(src, target.complex())?;
    Ok(map)
}

/// Inclusion of complexes sharing vertex names.
pub fn inclusion<T: Ring, S: Chains<T> + ?Sized, U: Chains<T> + ?Sized>(source: &S, target: &U) -> Result<ChainMap<T>> {
    chain_map_from_simplex_map(source, target, |s| Some((1, s.to_vec())))
}

/// `(π)_#`: directed simplex to `sgn(s)` times its sorted vertex set.
pub fn projection_chain_map<T: Ring, S: Chains<T> + ?Sized, U: Chains<T> + ?Sized>(
    directed: &S,
    undirected: &U,
) -> Result<ChainMap<T>> {
    chain_map_from_simplex_map(directed, undirected, |s| Some(sort_with_sign(s)))
}

/// Chain map of a vertex map; simplices with a repeated image vertex go
/// to zero, undirected targets re-sort with sign.
pub fn vertex_map_chain_map<T: Ring, S: Chains<T> + ?Sized, U: Chains<T> + ?Sized>(
    source: &S,
    target: &U,
    phi: &BTreeMap<VertexId, VertexId>,
) -> Result<ChainMap<T>> {
    let directed = target.ambient().directed;
    chain_map_from_simplex_map(source, target, |s| {
        let img: Option<Simplex> = s.iter().map(|v| phi.get(v).copied()).collect();
        let img = img?;
        let (sign, sorted) = sort_with_sign(&img);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        if directed {
            Some((1, img))
        } else {
            Some((sign, sorted))
        }
    })
}
