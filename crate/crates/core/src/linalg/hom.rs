//! Presented groups, homomorphisms between them, and homology of a pair of
//! boundary maps with the lift data needed to build induced maps.

use super::group::FgAbGroup;
use super::lattice::{kernel_basis, kernel_with_left_inverse, LatticeSolver};
use super::matrix::Matrix;
use super::scalar::{Integer, Ring};
use super::snf::{invariant_factors, smith_tracked, Track};
use crate::error::{Error, Result};

/// Diagonal presentation: generator `i` has order `orders[i]`, zero meaning
/// infinite order. Unit orders never appear.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation<T> {
    pub orders: Vec<T>,
}

impl<T: Ring> Presentation<T> {
    pub fn new(orders: Vec<T>) -> Self {
        Presentation { orders }
    }

    pub fn free(n: usize) -> Self {
        Presentation { orders: vec![T::zero(); n] }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn group(&self) -> FgAbGroup {
        let free = self.orders.iter().filter(|o| o.is_zero()).count();
        let orders = self.orders.iter().filter(|o| !o.is_zero()).filter_map(|o| o.as_integer()).collect();
        FgAbGroup::from_cyclic(free, orders)
    }

    pub fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (x, o) in v.iter_mut().zip(&self.orders) {
            if !o.is_zero() {
                *x = x.reduce_mod(o);
            }
        }
        v
    }

    pub fn is_zero_element(&self, v: &[T]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    pub fn relation_matrix(&self) -> Matrix<T> {
        let n = self.len();
        Matrix::from_triplets(n, n, self.orders.iter().cloned().enumerate().map(|(i, o)| (i, i, o)).collect())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.orders.clone();
        orders.extend(other.orders.iter().cloned());
        Presentation { orders }
    }
}

/// Homomorphism between presented groups; `matrix` is target × source.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupHom<T> {
    pub source: Presentation<T>,
    pub target: Presentation<T>,
    pub matrix: Matrix<T>,
}

impl<T: Ring> GroupHom<T> {
    /// Reduces entries and checks that source relations land in target
    /// relations.
    pub fn new(source: Presentation<T>, target: Presentation<T>, matrix: Matrix<T>) -> Result<Self> {
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(Error::DimensionMismatch { expected: target.len() * source.len(), found: matrix.rows() * matrix.cols() });
        }
        let cols: Vec<Vec<T>> = matrix.columns().into_iter().map(|c| target.reduce(c)).collect();
        for (j, o) in source.orders.iter().enumerate() {
            if o.is_zero() {
                continue;
            }
            let scaled: Vec<T> = cols[j].iter().map(|x| x.clone() * o.clone()).collect();
            if !target.is_zero_element(&scaled) {
                return Err(Error::IllDefinedHom(j));
            }
        }
        let matrix = Matrix::from_columns(&cols, target.len());
        Ok(GroupHom { source, target, matrix })
    }

    pub fn identity(p: &Presentation<T>) -> Self {
        GroupHom { source: p.clone(), target: p.clone(), matrix: Matrix::identity(p.len()) }
    }

    pub fn zero(source: &Presentation<T>, target: &Presentation<T>) -> Self {
        GroupHom { source: source.clone(), target: target.clone(), matrix: Matrix::zeros(target.len(), source.len()) }
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &GroupHom<T>) -> GroupHom<T> {
        assert_eq!(self.target, after.source, "composing incompatible homomorphisms");
        let m = if self.source.is_empty() || after.target.is_empty() {
            Matrix::zeros(after.target.len(), self.source.len())
        } else {
            after.matrix.mul(&self.matrix)
        };
        GroupHom::new(self.source.clone(), after.target.clone(), m).expect("composite of well-defined maps")
    }

    pub fn negate(&self) -> Self {
        let m = self.matrix.scale(&(-T::one()));
        GroupHom::new(self.source.clone(), self.target.clone(), m).expect("negation preserves relations")
    }

    /// Equality as homomorphisms (entries compared modulo target orders).
    pub fn same_as(&self, other: &GroupHom<T>) -> bool {
        self.source == other.source && self.target == other.target && self.matrix == other.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `A → B ⊕ C`, `a ↦ (f a, g a)`.
    pub fn pair(f: &GroupHom<T>, g: &GroupHom<T>) -> GroupHom<T> {
        assert_eq!(f.source, g.source, "pairing maps with different sources");
        GroupHom::new(f.source.clone(), f.target.direct_sum(&g.target), f.matrix.vstack(&g.matrix))
            .expect("pair of well-defined maps")
    }

    /// `A ⊕ B → C`, `(a, b) ↦ f a + g b`.
    pub fn copair(f: &GroupHom<T>, g: &GroupHom<T>) -> GroupHom<T> {
        assert_eq!(f.target, g.target, "copairing maps with different targets");
        GroupHom::new(f.source.direct_sum(&g.source), f.target.clone(), f.matrix.hstack(&g.matrix))
            .expect("copair of well-defined maps")
    }

    /// `A ⊕ B → C ⊕ D` block diagonal.
    pub fn direct_sum(f: &GroupHom<T>, g: &GroupHom<T>) -> GroupHom<T> {
        let top = f.matrix.hstack(&Matrix::zeros(f.target.len(), g.source.len()));
        let bottom = Matrix::zeros(g.target.len(), f.source.len()).hstack(&g.matrix);
        GroupHom::new(f.source.direct_sum(&g.source), f.target.direct_sum(&g.target), top.vstack(&bottom))
            .expect("direct sum of well-defined maps")
    }

    fn with_target_relations(&self) -> Matrix<T> {
        self.matrix.hstack(&self.target.relation_matrix())
    }

    /// Lifts (in source coordinates) generating the kernel.
    pub fn kernel_lifts(&self) -> Vec<Vec<T>> {
        let a = self.source.len();
        if a == 0 {
            return Vec::new();
        }
        let k = kernel_basis(&self.with_target_relations());
        k.columns().into_iter().map(|c| c[..a].to_vec()).filter(|c| !self.source.is_zero_element(c)).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_lifts().is_empty()
    }

    pub fn is_surjective(&self) -> bool {
        let solver = LatticeSolver::new(&self.with_target_relations());
        (0..self.target.len()).all(|i| {
            let mut e = vec![T::zero(); self.target.len()];
            e[i] = T::one();
            solver.solve(&e).is_some()
        })
    }

    /// Whether `v` (target coordinates) lies in the image.
    pub fn image_contains(&self, solver: &LatticeSolver<T>, v: &[T]) -> bool {
        debug_assert_eq!(solver.rows(), self.target.len());
        solver.solve(v).is_some()
    }

    pub fn image_solver(&self) -> LatticeSolver<T> {
        LatticeSolver::new(&self.with_target_relations())
    }

    /// Cokernel as an abstract group (integers only meaningful over Z).
    pub fn cokernel(&self) -> FgAbGroup {
        let m = self.with_target_relations();
        let (r, factors) = invariant_factors(&m);
        let free = self.target.len() - r;
        FgAbGroup::from_cyclic(free, factors.iter().filter_map(|d| d.as_integer()).collect())
    }
}

/// `im f = ker g` at the middle group, by double inclusion.
pub fn is_exact_at<T: Ring>(f: &GroupHom<T>, g: &GroupHom<T>) -> bool {
    if f.target != g.source {
        return false;
    }
    if !f.then(g).is_zero() {
        return false;
    }
    let solver = f.image_solver();
    g.kernel_lifts().iter().all(|x| solver.solve(x).is_some())
}

/// `H_n = ker(D_n) / im(D_{n+1})` with generators and coordinates.
#[derive(Debug, Clone)]
pub struct HomologyPresentation<T> {
    d_n: Matrix<T>,
    cycles: Matrix<T>,
    left_inv: Matrix<T>,
    basis_change: Matrix<T>,
    kept: Vec<usize>,
    representatives: Matrix<T>,
    pub presentation: Presentation<T>,
}

impl<T: Ring> HomologyPresentation<T> {
    pub fn group(&self) -> FgAbGroup {
        self.presentation.group()
    }

    pub fn ambient_dim(&self) -> usize {
        self.d_n.cols()
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.len()
    }

    /// A cycle representing generator `g`.
    pub fn representative(&self, g: usize) -> Vec<T> {
        self.representatives.column(g)
    }

    /// Coordinates of the class of cycle `x`.
    pub fn coords(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: x.len() });
        }
        if self.d_n.rows() > 0 && self.d_n.mul_vec(x).iter().any(|v| !v.is_zero()) {
            return Err(Error::NotACycle);
        }
        if self.cycles.cols() == 0 {
            return Ok(Vec::new());
        }
        let c = self.left_inv.mul_vec(x);
        if self.cycles.mul_vec(&c) != x {
            return Err(Error::NotACycle);
        }
        let y = self.basis_change.mul_vec(&c);
        let picked = self.kept.iter().map(|&i| y[i].clone()).collect();
        Ok(self.presentation.reduce(picked))
    }

    pub fn is_boundary(&self, x: &[T]) -> Result<bool> {
        Ok(self.coords(x)?.iter().all(|v| v.is_zero()))
    }
}

/// Homology of `C_{n+1} --D_{n+1}--> C_n --D_n--> C_{n-1}` with presentation.
pub fn homology_of_pair<T: Ring>(d_n: &Matrix<T>, d_n1: &Matrix<T>) -> Result<HomologyPresentation<T>> {
    if d_n.cols() != d_n1.rows() {
        return Err(Error::DimensionMismatch { expected: d_n.cols(), found: d_n1.rows() });
    }
    if d_n.rows() > 0 && d_n1.cols() > 0 && d_n.cols() > 0 && !d_n.mul(d_n1).is_zero() {
        return Err(Error::NotAComplex(0));
    }
    let (cycles, left_inv) = kernel_with_left_inverse(d_n);
    let z = cycles.cols();
    let y = if z == 0 || d_n1.cols() == 0 {
        Matrix::zeros(z, d_n1.cols())
    } else {
        left_inv.mul(d_n1)
    };
    let s = smith_tracked(&y, Track { u: true, u_inv: true, ..Track::default() });
    let mut kept = Vec::new();
    let mut orders = Vec::new();
    for i in 0..z {
        match s.diag.get(i) {
            Some(d) if d.is_unit() => {}
            Some(d) => {
                kept.push(i);
                orders.push(d.clone());
            }
            None => {
                kept.push(i);
                orders.push(T::zero());
            }
        }
    }
    let representatives = if z == 0 {
        Matrix::zeros(d_n.cols(), 0)
    } else {
        cycles.mul(&s.u_inv).select_columns(&kept)
    };
    Ok(HomologyPresentation {
        d_n: d_n.clone(),
        cycles,
        left_inv,
        basis_change: if z == 0 { Matrix::zeros(0, 0) } else { s.u },
        kept,
        representatives,
        presentation: Presentation::new(orders),
    })
}

/// Group invariants only, via the sparse elimination path.
pub fn homology_group_of_pair<T: Ring>(d_n: &Matrix<T>, d_n1: &Matrix<T>) -> FgAbGroup {
    let dim = d_n.cols();
    let (r_n, _) = invariant_factors(d_n);
    let (r_n1, tors) = invariant_factors(d_n1);
    let torsion: Vec<Integer> = tors.iter().filter_map(|d| d.as_integer()).collect();
    FgAbGroup::from_cyclic(dim - r_n - r_n1, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int_matrix;

    fn cycle_boundary(n: usize) -> Matrix<Integer> {
        // edges (i, i+1 mod n), vertices 0..n
        let mut t = Vec::new();
        for e in 0..n {
            let (a, b) = (e, (e + 1) % n);
            let (lo, hi) = (a.min(b), a.max(b));
            t.push((lo, e, Integer::from(-1)));
            t.push((hi, e, Integer::from(1)));
        }
        Matrix::from_triplets(n, n, t)
    }

    #[test]
    fn five_cycle_has_one_loop() {
        let d1 = cycle_boundary(5);
        let h1 = homology_of_pair(&d1, &Matrix::zeros(5, 0)).unwrap();
        assert_eq!(h1.group(), FgAbGroup::free(1));
        let h0 = homology_of_pair(&Matrix::zeros(0, 5), &d1).unwrap();
        assert_eq!(h0.group(), FgAbGroup::free(1));
        assert_eq!(homology_group_of_pair(&d1, &Matrix::zeros(5, 0)), FgAbGroup::free(1));
    }

    #[test]
    fn zero_maps_and_cokernel_of_two() {
        let h = homology_of_pair::<Integer>(&Matrix::zeros(0, 3), &Matrix::zeros(3, 0)).unwrap();
        assert_eq!(h.group(), FgAbGroup::free(3));
        let h = homology_of_pair(&Matrix::zeros(0, 1), &int_matrix(&[&[2]])).unwrap();
        assert_eq!(h.group(), FgAbGroup::cyclic(2));
        let rep = h.representative(0);
        assert_eq!(h.coords(&rep).unwrap(), vec![Integer::from(1)]);
        assert_eq!(h.coords(&[Integer::from(2)]).unwrap(), vec![Integer::from(0)]);
    }

    #[test]
    fn rejects_non_complex() {
        let d = int_matrix(&[&[1]]);
        assert!(matches!(homology_of_pair(&d, &d), Err(Error::NotAComplex(_))));
    }

    #[test]
    fn exactness_of_multiplication_by_two() {
        // Z --2--> Z --> Z/2 --> 0
        let z = Presentation::<Integer>::free(1);
        let z2 = Presentation::new(vec![Integer::from(2)]);
        let f = GroupHom::new(z.clone(), z.clone(), int_matrix(&[&[2]])).unwrap();
        let g = GroupHom::new(z.clone(), z2.clone(), int_matrix(&[&[1]])).unwrap();
        assert!(is_exact_at(&f, &g));
        assert!(f.is_injective());
        assert!(g.is_surjective());
        assert!(!g.is_injective());
        assert_eq!(g.cokernel(), FgAbGroup::zero());
        assert_eq!(f.cokernel(), FgAbGroup::cyclic(2));
        // Z/2 -> Z is not well defined unless zero
        assert!(GroupHom::new(z2, z, int_matrix(&[&[1]])).is_err());
    }
}
