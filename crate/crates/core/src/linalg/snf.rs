//! Smith normal form over a Euclidean ring.
//!
//! Pivot rule: the nonzero entry of smallest Euclidean size in the active
//! block, ties broken by (row, column). Units end the scan early.

use super::matrix::Matrix;
use super::scalar::{Integer, Ring};

/// `U·M·V = D`, with `U⁻¹` kept for reading off image lattices and homology
/// generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    /// Nonzero diagonal entries d_1 | d_2 | …, canonical associates.
    pub diag: Vec<T>,
}

impl<T: Ring> Snf<T> {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

/// Integer decomposition as exposed to callers.
pub type SnfDecomposition = Snf<Integer>;

type Dense<T> = Vec<Vec<T>>;

struct Work<T> {
    a: Dense<T>,
    u: Option<Dense<T>>,
    u_inv: Option<Dense<T>>,
    v: Option<Dense<T>>,
    v_inv: Option<Dense<T>>,
}

fn ident<T: Ring>(n: usize) -> Dense<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

fn axpy_row<T: Ring>(m: &mut Dense<T>, dst: usize, src: usize, c: &T) {
    // row dst += c * row src
    let (s, d) = if src < dst {
        let (lo, hi) = m.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x = x.clone() + c.clone() * y.clone();
        }
    }
}

fn axpy_col<T: Ring>(m: &mut Dense<T>, dst: usize, src: usize, c: &T) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            row[dst] = row[dst].clone() + c.clone() * row[src].clone();
        }
    }
}

fn swap_cols<T>(m: &mut Dense<T>, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

impl<T: Ring> Work<T> {
    /// row i += c * row j
    fn row_add(&mut self, i: usize, j: usize, c: &T) {
        axpy_row(&mut self.a, i, j, c);
        if let Some(u) = &mut self.u {
            axpy_row(u, i, j, c);
        }
        if let Some(ui) = &mut self.u_inv {
            // U_inv := U_inv · E⁻¹, E⁻¹ = I - c e_ij
            axpy_col(ui, j, i, &(-c.clone()));
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            swap_cols(ui, i, j);
        }
    }

    fn row_scale(&mut self, i: usize, unit: &T) {
        for x in self.a[i].iter_mut() {
            *x = x.clone() * unit.clone();
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = x.clone() * unit.clone();
            }
        }
        if let Some(ui) = &mut self.u_inv {
            let inv = unit.unit_inverse();
            for row in ui.iter_mut() {
                row[i] = row[i].clone() * inv.clone();
            }
        }
    }

    /// col i += c * col j
    fn col_add(&mut self, i: usize, j: usize, c: &T) {
        axpy_col(&mut self.a, i, j, c);
        if let Some(v) = &mut self.v {
            axpy_col(v, i, j, c);
        }
        if let Some(vi) = &mut self.v_inv {
            axpy_row(vi, j, i, &(-c.clone()));
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        swap_cols(&mut self.a, i, j);
        if let Some(v) = &mut self.v {
            swap_cols(v, i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(i, j);
        }
    }
}

fn better<T: Ring>(cand: &T, best: Option<&T>) -> bool {
    match best {
        None => true,
        Some(b) => cand.size_cmp(b) == std::cmp::Ordering::Less,
    }
}

/// Diagonalize `a` in place, tracking the requested transforms.
fn reduce<T: Ring>(w: &mut Work<T>) -> Vec<T> {
    let m = w.a.len();
    let n = w.a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        // smallest pivot in the active block
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..m {
            for j in t..n {
                let x = &w.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if better(x, best.map(|(bi, bj)| &w.a[bi][bj])) {
                    best = Some((i, j));
                    if x.is_unit() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let (q, _) = w.a[i][t].quo_rem(&w.a[t][t]);
                    if !q.is_zero() {
                        w.row_add(i, t, &(-q));
                    }
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let (q, _) = w.a[t][j].quo_rem(&w.a[t][t]);
                    if !q.is_zero() {
                        w.col_add(j, t, &(-q));
                    }
                }
            }
            // leftover remainders in the pivot row/column: move the smallest in
            let mut rem: Option<(usize, bool)> = None;
            for i in t + 1..m {
                let x = &w.a[i][t];
                if !x.is_zero() {
                    let cur = rem.map(|(k, is_row)| if is_row { &w.a[k][t] } else { &w.a[t][k] });
                    if better(x, cur) {
                        rem = Some((i, true));
                    }
                }
            }
            for j in t + 1..n {
                let x = &w.a[t][j];
                if !x.is_zero() {
                    let cur = rem.map(|(k, is_row)| if is_row { &w.a[k][t] } else { &w.a[t][k] });
                    if better(x, cur) {
                        rem = Some((j, false));
                    }
                }
            }
            match rem {
                Some((i, true)) => {
                    w.row_swap(t, i);
                    continue;
                }
                Some((j, false)) => {
                    w.col_swap(t, j);
                    continue;
                }
                None => {}
            }
            // divisibility of the remaining block by the pivot
            let p = w.a[t][t].clone();
            let mut bad = None;
            if !p.is_unit() {
                'div: for i in t + 1..m {
                    for j in t + 1..n {
                        if !w.a[i][j].is_zero() && !w.a[i][j].quo_rem(&p).1.is_zero() {
                            bad = Some(i);
                            break 'div;
                        }
                    }
                }
            }
            match bad {
                Some(i) => w.row_add(t, i, &T::one()),
                None => break,
            }
        }
        let unit = w.a[t][t].normalizing_unit();
        if unit != T::one() {
            w.row_scale(t, &unit);
        }
        diag.push(w.a[t][t].clone());
    }
    diag
}

fn finish<T: Ring>(rows: usize, cols: usize, d: Option<Dense<T>>) -> Matrix<T> {
    match d {
        Some(d) => Matrix::from_rows(d, if rows == 0 { 0 } else { cols }),
        None => Matrix::zeros(0, 0),
    }
}

/// Which transforms to accumulate.
#[derive(Debug, Clone, Copy, Default)]
pub struct Track {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Track {
    pub const ALL: Track = Track { u: true, u_inv: true, v: true, v_inv: true };
}

/// Full decomposition with all transforms.
pub fn smith<T: Ring>(m: &Matrix<T>) -> Snf<T> {
    smith_tracked(m, Track::ALL)
}

/// Decomposition tracking only the requested transforms; untracked ones are
/// returned as 0×0 matrices.
pub fn smith_tracked<T: Ring>(m: &Matrix<T>, track: Track) -> Snf<T> {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.to_rows(),
        u: track.u.then(|| ident(r)),
        u_inv: track.u_inv.then(|| ident(r)),
        v: track.v.then(|| ident(c)),
        v_inv: track.v_inv.then(|| ident(c)),
    };
    let diag = reduce(&mut w);
    let d = if r == 0 { Matrix::zeros(0, c) } else { Matrix::from_rows(w.a, c) };
    Snf {
        u: finish(r, r, w.u),
        u_inv: finish(r, r, w.u_inv),
        d,
        v: finish(c, c, w.v),
        v_inv: finish(c, c, w.v_inv),
        diag,
    }
}

/// Rank and non-unit invariant factors, without transforms.
///
/// Unit pivots are eliminated on sparse rows first (choosing the shortest
/// row), then the remaining block is finished densely.
pub fn invariant_factors<T: Ring>(m: &Matrix<T>) -> (usize, Vec<T>) {
    let mut rows: Vec<Vec<(usize, T)>> = m.to_sparse_rows().into_iter().filter(|r| !r.is_empty()).collect();
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None; // (len, row, pos)
        for (ri, row) in rows.iter().enumerate() {
            if best.is_some_and(|b| b.0 <= row.len()) {
                continue;
            }
            if let Some(pos) = row.iter().position(|(_, x)| x.is_unit()) {
                best = Some((row.len(), ri, pos));
            }
        }
        let Some((_, pr, pos)) = best else { break };
        let prow = rows.swap_remove(pr);
        let (pc, pv) = prow[pos].clone();
        let pinv = pv.unit_inverse();
        for row in rows.iter_mut() {
            if let Ok(k) = row.binary_search_by(|e| e.0.cmp(&pc)) {
                let f = row[k].1.clone() * pinv.clone();
                *row = sparse_axpy(row, &prow, &(-f));
            }
        }
        rows.retain(|r| !r.is_empty());
        rank += 1;
    }
    if rows.is_empty() {
        return (rank, Vec::new());
    }
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let dense: Dense<T> = rows
        .iter()
        .map(|r| {
            let mut out = vec![T::zero(); cols.len()];
            for (c, x) in r {
                out[cols.binary_search(c).unwrap()] = x.clone();
            }
            out
        })
        .collect();
    let mut w = Work { a: dense, u: None, u_inv: None, v: None, v_inv: None };
    let diag = reduce(&mut w);
    rank += diag.len();
    (rank, diag.into_iter().filter(|d| !d.is_unit()).collect())
}

fn sparse_axpy<T: Ring>(a: &[(usize, T)], b: &[(usize, T)], c: &T) -> Vec<(usize, T)> {
    // a + c*b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let x = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn rank<T: Ring>(m: &Matrix<T>) -> usize {
    invariant_factors(m).0
}
