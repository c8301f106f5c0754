//! Exact matrices with dense or sparse-triplet storage.

use std::fmt;

use super::scalar::Scalar;

/// Cell count from which sparse storage is considered.
pub const SPARSE_MIN_CELLS: usize = 10_000;
/// Density (percent of nonzeros) below which large matrices are stored sparse.
pub const SPARSE_MAX_DENSITY_PCT: usize = 5;

#[derive(Clone, Debug, PartialEq)]
enum Repr<T> {
    Dense(Vec<T>),
    /// Sorted by (row, col), unique keys, no explicit zeros.
    Sparse(Vec<(usize, usize, T)>),
}

/// Storage choice is a function of the entries alone, so derived equality
/// compares contents.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    repr: Repr<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_triplets(rows, cols, Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, T::one())).collect())
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self::with_dense(r, cols, data)
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(cols: &[Vec<T>], rows: usize) -> Self {
        let mut trip = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    trip.push((i, j, x.clone()));
                }
            }
        }
        Self::from_triplets(rows, cols.len(), trip)
    }

    /// Triplets may come in any order; repeated keys are summed.
    pub fn from_triplets(rows: usize, cols: usize, mut trip: Vec<(usize, usize, T)>) -> Self {
        trip.sort_by_key(|a| (a.0, a.1));
        let mut merged: Vec<(usize, usize, T)> = Vec::with_capacity(trip.len());
        for (i, j, x) in trip {
            assert!(i < rows && j < cols, "triplet out of bounds");
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => {
                    last.2 = last.2.clone() + x;
                }
                _ => merged.push((i, j, x)),
            }
        }
        merged.retain(|t| !t.2.is_zero());
        let cells = rows * cols;
        if cells >= SPARSE_MIN_CELLS && merged.len() * 100 < cells * SPARSE_MAX_DENSITY_PCT {
            Matrix { rows, cols, repr: Repr::Sparse(merged) }
        } else {
            let mut data = vec![T::zero(); cells];
            for (i, j, x) in merged {
                data[i * cols + j] = x;
            }
            Matrix { rows, cols, repr: Repr::Dense(data) }
        }
    }

    fn with_dense(rows: usize, cols: usize, data: Vec<T>) -> Self {
        let cells = rows * cols;
        let nnz = data.iter().filter(|x| !x.is_zero()).count();
        if cells >= SPARSE_MIN_CELLS && nnz * 100 < cells * SPARSE_MAX_DENSITY_PCT {
            let trip = data
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k / cols, k % cols, x))
                .collect();
            Matrix { rows, cols, repr: Repr::Sparse(trip) }
        } else {
            Matrix { rows, cols, repr: Repr::Dense(data) }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.repr, Repr::Sparse(_))
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        match &self.repr {
            Repr::Dense(d) => d[i * self.cols + j].clone(),
            Repr::Sparse(t) => match t.binary_search_by(|e| (e.0, e.1).cmp(&(i, j))) {
                Ok(k) => t[k].2.clone(),
                Err(_) => T::zero(),
            },
        }
    }

    /// Nonzero entries in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, T)> {
        match &self.repr {
            Repr::Dense(d) => d
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k / self.cols, k % self.cols, x.clone()))
                .collect(),
            Repr::Sparse(t) => t.clone(),
        }
    }

    pub fn nnz(&self) -> usize {
        match &self.repr {
            Repr::Dense(d) => d.iter().filter(|x| !x.is_zero()).count(),
            Repr::Sparse(t) => t.len(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (i, j, x) in self.triplets() {
            out[i][j] = x;
        }
        out
    }

    /// Rows as sorted (col, value) lists.
    pub fn to_sparse_rows(&self) -> Vec<Vec<(usize, T)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (i, j, x) in self.triplets() {
            out[i].push((j, x));
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.rows]; self.cols];
        for (i, j, x) in self.triplets() {
            out[j][i] = x;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let trip = self.triplets().into_iter().map(|(i, j, x)| (j, i, x)).collect();
        Self::from_triplets(self.cols, self.rows, trip)
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let b = other.to_sparse_rows();
        let mut acc: Vec<Vec<T>> = vec![vec![T::zero(); other.cols]; self.rows];
        for (i, k, x) in self.triplets() {
            for (j, y) in &b[k] {
                acc[i][*j] = acc[i][*j].clone() + x.clone() * y.clone();
            }
        }
        Self::from_rows(acc, other.cols)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        let mut out = vec![T::zero(); self.rows];
        for (i, j, x) in self.triplets() {
            out[i] = out[i].clone() + x * v[j].clone();
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let trip = self.triplets().into_iter().map(|(i, j, x)| (i, j, x * c.clone())).collect();
        Self::from_triplets(self.rows, self.cols, trip)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let mut trip = self.triplets();
        trip.extend(other.triplets());
        Self::from_triplets(self.rows, self.cols, trip)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut trip = self.triplets();
        trip.extend(other.triplets().into_iter().map(|(i, j, x)| (i, j + self.cols, x)));
        Self::from_triplets(self.rows, self.cols + other.cols, trip)
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut trip = self.triplets();
        trip.extend(other.triplets().into_iter().map(|(i, j, x)| (i + self.rows, j, x)));
        Self::from_triplets(self.rows + other.rows, self.cols, trip)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let trip = self
            .triplets()
            .into_iter()
            .filter(|t| pos[t.0] != usize::MAX)
            .map(|(i, j, x)| (pos[i], j, x))
            .collect();
        Self::from_triplets(idx.len(), self.cols, trip)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &j) in idx.iter().enumerate() {
            pos[j] = k;
        }
        let trip = self
            .triplets()
            .into_iter()
            .filter(|t| pos[t.1] != usize::MAX)
            .map(|(i, j, x)| (i, pos[j], x))
            .collect();
        Self::from_triplets(self.rows, idx.len(), trip)
    }

    /// Same entries, re-embedded into another ring.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        let trip = self.triplets().iter().map(|(i, j, x)| (*i, *j, f(x))).collect();
        Matrix::from_triplets(self.rows, self.cols, trip)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Build an integer matrix from small literals.
pub fn int_matrix(rows: &[&[i64]]) -> Matrix<super::Integer> {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect(),
        cols,
    )
}
