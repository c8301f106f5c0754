//! Kernels, images and solving over Z (lattice sense) and over fields.

use super::matrix::Matrix;
use super::scalar::Ring;
use super::snf::{smith_tracked, Snf, Track};

/// Columns span `{x : M·x = 0}`; over Z they are a basis of the full
/// kernel lattice.
pub fn kernel_basis<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    let s = smith_tracked(m, Track { v: true, ..Track::default() });
    let r = s.rank();
    let idx: Vec<usize> = (r..m.cols()).collect();
    s.v.select_columns(&idx)
}

/// Kernel basis together with a left inverse `L` (so `L·K = I`), read off
/// the same decomposition.
pub fn kernel_with_left_inverse<T: Ring>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let s = smith_tracked(m, Track { v: true, v_inv: true, ..Track::default() });
    let r = s.rank();
    let idx: Vec<usize> = (r..m.cols()).collect();
    (s.v.select_columns(&idx), s.v_inv.select_rows(&idx))
}

/// Repeated solves of `M·x = b` against one decomposition.
#[derive(Debug, Clone)]
pub struct LatticeSolver<T> {
    rows: usize,
    cols: usize,
    snf: Snf<T>,
}

impl<T: Ring> LatticeSolver<T> {
    pub fn new(m: &Matrix<T>) -> Self {
        let snf = smith_tracked(m, Track { u: true, v: true, ..Track::default() });
        LatticeSolver { rows: m.rows(), cols: m.cols(), snf }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Some `x` with `M·x = b` when one exists over the ring.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let c = if self.rows == 0 { Vec::new() } else { self.snf.u.mul_vec(b) };
        let r = self.snf.rank();
        if c[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = vec![T::zero(); self.cols];
        for i in 0..r {
            let (q, rem) = c[i].quo_rem(&self.snf.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        }
        if self.cols == 0 {
            return Some(y);
        }
        Some(self.snf.v.mul_vec(&y))
    }

    /// Solve column by column; `None` if any column fails.
    pub fn solve_matrix(&self, b: &Matrix<T>) -> Option<Matrix<T>> {
        let cols: Option<Vec<Vec<T>>> = b.columns().iter().map(|c| self.solve(c)).collect();
        Some(Matrix::from_columns(&cols?, self.cols))
    }
}

/// One-shot solve. Errors on a length mismatch.
pub fn solve_in_lattice<T: Ring>(m: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>, crate::Error> {
    if m.rows() != b.len() {
        return Err(crate::Error::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    Ok(LatticeSolver::new(m).solve(b))
}

/// Column-style Hermite normal form: a canonical basis of the column
/// lattice, in column-echelon shape with reduced entries left of each pivot.
pub fn column_hermite<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    let rows = m.rows();
    let mut cols: Vec<Vec<T>> = m.columns().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())).collect();
    let mut done = 0;
    for i in 0..rows {
        if done == cols.len() {
            break;
        }
        loop {
            // smallest nonzero entry in row i among unfinished columns
            let mut best: Option<usize> = None;
            for k in done..cols.len() {
                let x = &cols[k][i];
                if !x.is_zero() && best.is_none_or(|b| x.size_cmp(&cols[b][i]).is_lt()) {
                    best = Some(k);
                }
            }
            let Some(b) = best else { break };
            cols.swap(done, b);
            let mut clean = true;
            for k in done + 1..cols.len() {
                if cols[k][i].is_zero() {
                    continue;
                }
                let (q, r) = cols[k][i].quo_rem(&cols[done][i]);
                let piv = cols[done].clone();
                for (x, p) in cols[k].iter_mut().zip(piv) {
                    *x = x.clone() - q.clone() * p;
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if clean {
                let u = cols[done][i].normalizing_unit();
                for x in cols[done].iter_mut() {
                    *x = x.clone() * u.clone();
                }
                let piv = cols[done].clone();
                for col in cols.iter_mut().take(done) {
                    let q = col[i].quo_rem(&piv[i]).0;
                    if !q.is_zero() {
                        for (x, p) in col.iter_mut().zip(&piv) {
                            *x = x.clone() - q.clone() * p.clone();
                        }
                    }
                }
                done += 1;
                break;
            }
        }
        cols.retain(|c| c.iter().any(|x| !x.is_zero()));
    }
    cols.truncate(done);
    Matrix::from_columns(&cols, rows)
}
