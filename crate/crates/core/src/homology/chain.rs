//! Chain complexes: abstract, simplicial, and submodule (Inf/Sup) forms.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hyper::{Edge, Graded, VertexId};
use crate::linalg::{homology_group_of_pair, homology_of_pair, FgAbGroup, HomologyPresentation, LatticeSolver, Matrix, Ring, RingKind};

/// Free chain complex given by its boundary matrices.
///
/// Degrees run from `min_degree` (0, or −1 when augmented) to
/// `min_degree + ranks.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex<T> {
    pub ring: RingKind,
    min_degree: i64,
    ranks: Vec<usize>,
    /// `boundaries[i]` leaves degree `min_degree + i`.
    boundaries: Vec<Matrix<T>>,
}

impl<T: Ring> ChainComplex<T> {
    /// Checks shapes and `∂∘∂ = 0`.
    pub fn new(ring: RingKind, min_degree: i64, ranks: Vec<usize>, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        assert_eq!(ranks.len(), boundaries.len(), "one boundary per degree");
        for (i, b) in boundaries.iter().enumerate() {
            let below = if i == 0 { 0 } else { ranks[i - 1] };
            if b.cols() != ranks[i] || b.rows() != below {
                return Err(Error::DimensionMismatch { expected: ranks[i], found: b.cols() });
            }
            if i > 0 && b.cols() > 0 && boundaries[i - 1].rows() > 0 && !boundaries[i - 1].mul(b).is_zero() {
                return Err(Error::NotAComplex(min_degree + i as i64));
            }
        }
        Ok(ChainComplex { ring, min_degree, ranks, boundaries })
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest degree with a (possibly zero) module.
    pub fn top_degree(&self) -> i64 {
        self.min_degree + self.ranks.len() as i64 - 1
    }

    pub fn rank(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |i| self.ranks[i])
    }

    fn slot(&self, n: i64) -> Option<usize> {
        let i = n - self.min_degree;
        (i >= 0 && (i as usize) < self.ranks.len()).then_some(i as usize)
    }

    /// `∂_n : C_n → C_{n−1}`, zero-sized outside the stored range.
    pub fn boundary(&self, n: i64) -> Matrix<T> {
        match self.slot(n) {
            Some(i) => self.boundaries[i].clone(),
            None => Matrix::zeros(self.rank(n - 1), self.rank(n)),
        }
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_degree..=self.top_degree()
    }

    pub fn homology_presentation(&self, n: i64) -> HomologyPresentation<T> {
        homology_of_pair(&self.boundary(n), &self.boundary(n + 1)).expect("stored complexes satisfy ∂∘∂ = 0")
    }

    pub fn homology_presentations(&self) -> Vec<HomologyPresentation<T>> {
        let degs: Vec<i64> = self.degrees().collect();
        degs.par_iter().map(|&n| self.homology_presentation(n)).collect()
    }

    pub fn homology_group(&self, n: i64) -> FgAbGroup {
        homology_group_of_pair(&self.boundary(n), &self.boundary(n + 1))
    }

    /// `(degree, group)` for every stored degree.
    pub fn homology(&self) -> Vec<(i64, FgAbGroup)> {
        let degs: Vec<i64> = self.degrees().collect();
        degs.par_iter().map(|&n| (n, self.homology_group(n))).collect()
    }
}

/// A simplex as its vertex list (sorted for undirected complexes). The
/// empty list is the augmentation generator in degree −1.
pub type Simplex = Vec<VertexId>;

/// Chain complex of a (directed) simplicial complex with named generators.
#[derive(Debug, Clone)]
pub struct SimplicialChains<T: Ring> {
    pub directed: bool,
    pub augmented: bool,
    ctx: T::Ctx,
    gens: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    pub complex: ChainComplex<T>,
}

/// Alternating-sign deletion boundary of one simplex.
pub fn simplex_boundary(s: &[VertexId]) -> Vec<(Simplex, i64)> {
    (0..s.len())
        .map(|i| {
            let mut f = s.to_vec();
            f.remove(i);
            (f, if i % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

impl<T: Ring> SimplicialChains<T> {
    /// Chains of `k`, which must be (directed) simplicial.
    pub fn new<E: Edge>(k: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<Self> {
        if let Some(f) = k.missing_face() {
            return Err(Error::NotSimplicial(f.vertices().iter().map(|v| v.0).collect()));
        }
        let top = k.max_len();
        let mut gens: Vec<Vec<Simplex>> = Vec::new();
        if augmented {
            gens.push(vec![Vec::new()]);
        }
        for len in 1..=top {
            gens.push(k.level(len).map(|e| e.vertices().to_vec()).collect());
        }
        Self::from_generators(E::DIRECTED, augmented, gens, ctx)
    }

    /// From explicit per-degree generator lists (lowest degree first).
    pub fn from_generators(directed: bool, augmented: bool, gens: Vec<Vec<Simplex>>, ctx: &T::Ctx) -> Result<Self> {
        let index: Vec<HashMap<Simplex, usize>> =
            gens.iter().map(|g| g.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let min_degree = if augmented { -1 } else { 0 };
        let mut boundaries = Vec::with_capacity(gens.len());
        for (i, level) in gens.iter().enumerate() {
            if i == 0 {
                boundaries.push(Matrix::zeros(0, level.len()));
                continue;
            }
            let mut trip = Vec::new();
            for (j, s) in level.iter().enumerate() {
                for (f, sign) in simplex_boundary(s) {
                    let Some(&r) = index[i - 1].get(&f) else {
                        return Err(Error::NotSimplicial(f.iter().map(|v| v.0).collect()));
                    };
                    trip.push((r, j, T::embed(sign, ctx)));
                }
            }
            boundaries.push(Matrix::from_triplets(gens[i - 1].len(), level.len(), trip));
        }
        let ranks = gens.iter().map(|g| g.len()).collect();
        let complex = ChainComplex::new(T::ring_kind(ctx), min_degree, ranks, boundaries)?;
        Ok(SimplicialChains { directed, augmented, ctx: ctx.clone(), gens, index, complex })
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn generators(&self, n: i64) -> &[Simplex] {
        let i = n - self.complex.min_degree();
        if i < 0 || i as usize >= self.gens.len() {
            return &[];
        }
        &self.gens[i as usize]
    }

    pub fn index_of(&self, s: &[VertexId]) -> Option<usize> {
        let n = s.len() as i64 - 1;
        let i = n - self.complex.min_degree();
        if i < 0 || i as usize >= self.index.len() {
            return None;
        }
        self.index[i as usize].get(s).copied()
    }

    /// Boundary of a generator as a signed list of generators.
    pub fn boundary_of(&self, s: &[VertexId]) -> Vec<(Simplex, i64)> {
        if s.len() as i64 - 1 <= self.complex.min_degree() {
            return Vec::new();
        }
        simplex_boundary(s)
    }
}

/// Any chain complex realized inside the chains of a simplicial complex:
/// degree `n` of the complex has a basis given by the columns of
/// `basis(n)` in ambient simplex coordinates.
pub trait Chains<T: Ring>: Sync {
    fn ambient(&self) -> &SimplicialChains<T>;
    fn complex(&self) -> &ChainComplex<T>;
    /// `None` means the full coordinate basis.
    fn basis(&self, n: i64) -> Option<&Matrix<T>>;

    /// Ambient coordinates of a vector given in this complex's basis.
    fn to_ambient(&self, n: i64, x: &[T]) -> Vec<T> {
        match self.basis(n) {
            None => x.to_vec(),
            Some(b) => b.mul_vec(x),
        }
    }
}

impl<T: Ring> Chains<T> for SimplicialChains<T> {
    fn ambient(&self) -> &SimplicialChains<T> {
        self
    }
    fn complex(&self) -> &ChainComplex<T> {
        &self.complex
    }
    fn basis(&self, _: i64) -> Option<&Matrix<T>> {
        None
    }
}

/// Subcomplex of an ambient simplicial chain complex spanned by chosen
/// bases, with boundaries re-expressed in those bases.
#[derive(Debug, Clone)]
pub struct SubmoduleComplex<T: Ring> {
    pub ambient: SimplicialChains<T>,
    bases: Vec<Matrix<T>>,
    pub complex: ChainComplex<T>,
}

impl<T: Ring> SubmoduleComplex<T> {
    /// `bases[i]` spans degree `min_degree + i`; each must map into the span
    /// of the next lower basis under the ambient boundary.
    pub fn new(ambient: SimplicialChains<T>, bases: Vec<Matrix<T>>) -> Result<Self> {
        let amb = &ambient.complex;
        let min = amb.min_degree();
        let mut boundaries = Vec::with_capacity(bases.len());
        for (i, b) in bases.iter().enumerate() {
            let n = min + i as i64;
            if i == 0 {
                boundaries.push(Matrix::zeros(0, b.cols()));
                continue;
            }
            let image = if b.cols() == 0 { Matrix::zeros(amb.rank(n - 1), 0) } else { amb.boundary(n).mul(b) };
            let lower = &bases[i - 1];
            let solved = if b.cols() == 0 {
                Some(Matrix::zeros(lower.cols(), 0))
            } else if lower.cols() == 0 {
                image.is_zero().then(|| Matrix::zeros(0, b.cols()))
            } else {
                LatticeSolver::new(lower).solve_matrix(&image)
            };
            boundaries.push(solved.ok_or(Error::NotAComplex(n))?);
        }
        let ranks = bases.iter().map(|b| b.cols()).collect();
        let complex = ChainComplex::new(amb.ring, min, ranks, boundaries)?;
        Ok(SubmoduleComplex { ambient, bases, complex })
    }

    pub fn basis_matrix(&self, n: i64) -> &Matrix<T> {
        &self.bases[(n - self.complex.min_degree()) as usize]
    }
}

impl<T: Ring> Chains<T> for SubmoduleComplex<T> {
    fn ambient(&self) -> &SimplicialChains<T> {
        &self.ambient
    }
    fn complex(&self) -> &ChainComplex<T> {
        &self.complex
    }
    fn basis(&self, n: i64) -> Option<&Matrix<T>> {
        let i = n - self.complex.min_degree();
        (i >= 0 && (i as usize) < self.bases.len()).then(|| &self.bases[i as usize])
    }
}
