//! Long and short exact rows of homology groups, ladders between them,
//! and the Mayer-Vietoris construction.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::chain::{Chains, SimplicialChains};
use super::maps::{inclusion, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{is_exact_at, FgAbGroup, GroupHom, HomologyPresentation, LatticeSolver, Matrix, Presentation, Ring};

/// A sequence of presented groups joined by homomorphisms; `arrows[i]`
/// leaves `nodes[i]`. The first and last nodes are zero sentinels.
#[derive(Debug, Clone)]
pub struct Row<T> {
    pub labels: Vec<(String, i64)>,
    pub nodes: Vec<Presentation<T>>,
    pub arrows: Vec<GroupHom<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeReport {
    pub label: String,
    pub n: i64,
    #[serde(flatten)]
    pub group: FgAbGroup,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowReport {
    pub name: String,
    pub nodes: Vec<NodeReport>,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquareReport {
    /// Label of the node the horizontal arrows leave.
    pub from: String,
    pub n: i64,
    pub commutes: bool,
}

/// Rows with exactness verdicts and, for a ladder, square verdicts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderReport {
    pub rows: Vec<RowReport>,
    pub squares: Vec<SquareReport>,
    pub exact: bool,
    pub squares_commute: bool,
}

impl<T: Ring> Row<T> {
    fn new() -> Self {
        Row { labels: vec![("0".into(), 0)], nodes: vec![Presentation::new(Vec::new())], arrows: Vec::new() }
    }

    fn push(&mut self, label: String, n: i64, arrow: GroupHom<T>) {
        self.labels.push((label, n));
        self.nodes.push(arrow.target.clone());
        self.arrows.push(arrow);
    }

    fn last(&self) -> &Presentation<T> {
        self.nodes.last().expect("row starts with a sentinel")
    }

    fn close(&mut self) {
        let zero = Presentation::new(Vec::new());
        let a = GroupHom::zero(self.last(), &zero);
        self.push("0".into(), 0, a);
    }

    /// Exactness at every non-sentinel node.
    pub fn exactness(&self) -> Vec<bool> {
        (1..self.nodes.len() - 1)
            .into_par_iter()
            .map(|i| is_exact_at(&self.arrows[i - 1], &self.arrows[i]))
            .collect()
    }

    pub fn report(&self, name: &str) -> RowReport {
        let exact = self.exactness();
        let nodes = (1..self.nodes.len() - 1)
            .map(|i| NodeReport {
                label: self.labels[i].0.clone(),
                n: self.labels[i].1,
                group: self.nodes[i].group(),
                exact: exact[i - 1],
            })
            .collect();
        RowReport { name: name.into(), exact: exact.iter().all(|&e| e), nodes }
    }
}

/// Checks `v_{i+1} ∘ top_i = bottom_i ∘ v_i` for every arrow.
pub fn ladder_squares<T: Ring>(top: &Row<T>, bottom: &Row<T>, verticals: &[GroupHom<T>]) -> Result<Vec<SquareReport>> {
    if top.nodes.len() != bottom.nodes.len() || verticals.len() != top.nodes.len() {
        return Err(Error::Invalid("ladder rows have different shapes".into()));
    }
    Ok((0..top.arrows.len())
        .into_par_iter()
        .map(|i| {
            let a = top.arrows[i].then(&verticals[i + 1]);
            let b = verticals[i].then(&bottom.arrows[i]);
            SquareReport { from: top.labels[i].0.clone(), n: top.labels[i].1, commutes: a.same_as(&b) }
        })
        .collect())
}

pub fn ladder_report<T: Ring>(rows: &[(&str, &Row<T>)], squares: Vec<SquareReport>) -> LadderReport {
    let rows: Vec<RowReport> = rows.iter().map(|(name, r)| r.report(name)).collect();
    let exact = rows.iter().all(|r| r.exact);
    let squares_commute = squares.iter().all(|s| s.commutes);
    LadderReport { rows, squares, exact, squares_commute }
}

/// Degreewise check that `right ∘ top = bottom ∘ left` on homology for a
/// square of chain maps `a → b`, `c → d`, `a → c`, `b → d`.
#[allow(clippy::too_many_arguments)]
pub fn homology_square<T: Ring>(
    a: &dyn Chains<T>,
    b: &dyn Chains<T>,
    c: &dyn Chains<T>,
    d: &dyn Chains<T>,
    top: &ChainMap<T>,
    bottom: &ChainMap<T>,
    left: &ChainMap<T>,
    right: &ChainMap<T>,
) -> Result<Vec<SquareReport>> {
    let (lo, hi) = (a.complex().min_degree(), a.complex().top_degree());
    let caches = [a, b, c, d].map(|x| HomologyCache::new(x, lo, hi));
    (lo..=hi)
        .map(|n| {
            let t = induced_cached(top, n, &caches[0], &caches[1])?;
            let r = induced_cached(right, n, &caches[1], &caches[3])?;
            let l = induced_cached(left, n, &caches[0], &caches[2])?;
            let bt = induced_cached(bottom, n, &caches[2], &caches[3])?;
            Ok(SquareReport { from: format!("H{n}"), n, commutes: t.then(&r).same_as(&l.then(&bt)) })
        })
        .collect()
}

/// Homology presentations of one complex over a degree window.
pub struct HomologyCache<T> {
    pres: BTreeMap<i64, HomologyPresentation<T>>,
}

impl<T: Ring> HomologyCache<T> {
    pub fn new<C: Chains<T> + ?Sized>(c: &C, lo: i64, hi: i64) -> Self {
        let degs: Vec<i64> = (lo..=hi).collect();
        let pres = degs.par_iter().map(|&n| (n, c.complex().homology_presentation(n))).collect();
        HomologyCache { pres }
    }

    pub fn at(&self, n: i64) -> &HomologyPresentation<T> {
        &self.pres[&n]
    }

    pub fn get(&self, n: i64) -> Option<&HomologyPresentation<T>> {
        self.pres.get(&n)
    }

    pub fn pres_map(&self) -> &BTreeMap<i64, HomologyPresentation<T>> {
        &self.pres
    }
}

/// Induced map between cached presentations (zero outside the map's range).
pub fn induced_cached<T: Ring>(f: &ChainMap<T>, n: i64, s: &HomologyCache<T>, t: &HomologyCache<T>) -> Result<GroupHom<T>> {
    f.induced_at(n, s.at(n), t.at(n))
}

/// The four complexes and four inclusions of a Mayer-Vietoris square
/// `I → A, I → B, A → U, B → U`.
pub struct MvSquare<'a, T: Ring> {
    pub inter: &'a dyn Chains<T>,
    pub left: &'a dyn Chains<T>,
    pub right: &'a dyn Chains<T>,
    pub union: &'a dyn Chains<T>,
    pub i_l: ChainMap<T>,
    pub i_r: ChainMap<T>,
    pub j_l: ChainMap<T>,
    pub j_r: ChainMap<T>,
}

impl<'a, T: Ring> MvSquare<'a, T> {
    /// Square of inclusions between complexes named on one vertex set.
    pub fn of_inclusions(
        inter: &'a dyn Chains<T>,
        left: &'a dyn Chains<T>,
        right: &'a dyn Chains<T>,
        union: &'a dyn Chains<T>,
    ) -> Result<Self> {
        Ok(MvSquare {
            i_l: inclusion(inter, left)?,
            i_r: inclusion(inter, right)?,
            j_l: inclusion(left, union)?,
            j_r: inclusion(right, union)?,
            inter,
            left,
            right,
            union,
        })
    }

    fn complexes(&self) -> [&'a dyn Chains<T>; 4] {
        [self.inter, self.left, self.right, self.union]
    }

    pub fn degree_window(&self) -> (i64, i64) {
        let lo = self.complexes().iter().map(|c| c.complex().min_degree()).min().unwrap_or(0);
        let hi = self.complexes().iter().map(|c| c.complex().top_degree()).max().unwrap_or(0);
        (lo, hi.max(lo))
    }
}

/// Everything needed to map between two MV rows.
pub struct MvRow<T> {
    pub row: Row<T>,
    pub caches: [HomologyCache<T>; 4],
    pub lo: i64,
    pub hi: i64,
}

fn is_plain<T: Ring>(c: &dyn Chains<T>, n: i64) -> bool {
    c.basis(n).is_none()
}

/// Solve `[J_l | J_r] (a; b) = z`. For full simplicial complexes each
/// simplex of the union is taken from the left piece when it lies there,
/// otherwise from the right; in general the lattice solver decides.
fn lift_to_sum<T: Ring>(sq: &MvSquare<'_, T>, n: i64, z: &[T]) -> Option<(Vec<T>, Vec<T>)> {
    let (rl, rr) = (sq.left.complex().rank(n), sq.right.complex().rank(n));
    if is_plain(sq.left, n) && is_plain(sq.right, n) && is_plain(sq.union, n) {
        let (ul, ur): (&SimplicialChains<T>, &SimplicialChains<T>) = (sq.left.ambient(), sq.right.ambient());
        let gens = sq.union.ambient().generators(n);
        let mut a = vec![T::zero(); rl];
        let mut b = vec![T::zero(); rr];
        for (x, s) in z.iter().zip(gens) {
            if x.is_zero() {
                continue;
            }
            if let Some(i) = ul.index_of(s) {
                a[i] = x.clone();
            } else {
                b[ur.index_of(s)?] = x.clone();
            }
        }
        return Some((a, b));
    }
    let jl = sq.j_l.matrix(n).cloned().unwrap_or_else(|| Matrix::zeros(z.len(), rl));
    let jr = sq.j_r.matrix(n).cloned().unwrap_or_else(|| Matrix::zeros(z.len(), rr));
    let both = jl.hstack(&jr);
    if both.cols() == 0 {
        return z.iter().all(|x| x.is_zero()).then(|| (Vec::new(), Vec::new()));
    }
    let x = LatticeSolver::new(&both).solve(z)?;
    Some((x[..rl].to_vec(), x[rl..].to_vec()))
}

/// Connecting map `δ_n : H_n(U) → H_{n−1}(I)` by the zig-zag lift.
fn connecting<T: Ring>(sq: &MvSquare<'_, T>, n: i64, c: &[HomologyCache<T>; 4]) -> Result<GroupHom<T>> {
    let hu = c[3].at(n);
    let hi = c[0].at(n - 1);
    let il = sq.i_l.matrix(n - 1).cloned().unwrap_or_else(|| Matrix::zeros(sq.left.complex().rank(n - 1), 0));
    let solver = (il.cols() > 0 && il.rows() > 0).then(|| LatticeSolver::new(&il));
    let mut cols = Vec::with_capacity(hu.num_generators());
    for g in 0..hu.num_generators() {
        let z = hu.representative(g);
        let (a, b) = lift_to_sum(sq, n, &z).ok_or(Error::Invalid(format!("union chain in degree {n} does not lift")))?;
        let da = mul_vec_or_zero(&sq.left.complex().boundary(n), &a);
        let db = mul_vec_or_zero(&sq.right.complex().boundary(n), &b);
        let w = match &solver {
            Some(s) => s.solve(&da),
            None => da.iter().all(|x| x.is_zero()).then(|| vec![T::zero(); sq.inter.complex().rank(n - 1)]),
        }
        .ok_or(Error::Invalid(format!("boundary in degree {} is not in the intersection", n - 1)))?;
        let neg_w: Vec<T> = w.iter().map(|x| -x.clone()).collect();
        if sq.i_r.apply(n - 1, &neg_w, db.len()) != db {
            return Err(Error::Invalid(format!("boundary in degree {} does not match across the pieces", n - 1)));
        }
        cols.push(hi.coords(&w)?);
    }
    GroupHom::new(hu.presentation.clone(), hi.presentation.clone(), Matrix::from_columns(&cols, hi.num_generators()))
}

fn mul_vec_or_zero<T: Ring>(m: &Matrix<T>, x: &[T]) -> Vec<T> {
    if m.rows() == 0 || m.cols() == 0 {
        vec![T::zero(); m.rows()]
    } else {
        m.mul_vec(x)
    }
}

/// `… → H_n(I) → H_n(A) ⊕ H_n(B) → H_n(U) → H_{n−1}(I) → …` from degree
/// `hi` down to `lo`, with `α = (i_A, −i_B)` and `β = j_A + j_B`.
pub fn mv_row<T: Ring>(sq: &MvSquare<'_, T>, lo: i64, hi: i64) -> Result<MvRow<T>> {
    let caches = [
        HomologyCache::new(sq.inter, lo - 1, hi),
        HomologyCache::new(sq.left, lo - 1, hi),
        HomologyCache::new(sq.right, lo - 1, hi),
        HomologyCache::new(sq.union, lo - 1, hi),
    ];
    let mut row = Row::new();
    for n in (lo..=hi).rev() {
        let i_in = if n == hi {
            GroupHom::zero(row.last(), &caches[0].at(n).presentation)
        } else {
            connecting(sq, n + 1, &caches)?
        };
        row.push(format!("H{n}(I)"), n, i_in);
        let al = induced_cached(&sq.i_l, n, &caches[0], &caches[1])?;
        let ar = induced_cached(&sq.i_r, n, &caches[0], &caches[2])?.negate();
        row.push(format!("H{n}(A)+H{n}(B)"), n, GroupHom::pair(&al, &ar));
        let bl = induced_cached(&sq.j_l, n, &caches[1], &caches[3])?;
        let br = induced_cached(&sq.j_r, n, &caches[2], &caches[3])?;
        row.push(format!("H{n}(U)"), n, GroupHom::copair(&bl, &br));
    }
    row.close();
    Ok(MvRow { row, caches, lo, hi })
}

/// Vertical maps between two MV rows over the same window, given chain
/// maps on each of the four corners.
pub fn mv_verticals<T: Ring>(top: &MvRow<T>, bottom: &MvRow<T>, v: [&ChainMap<T>; 4]) -> Result<Vec<GroupHom<T>>> {
    let mut out = vec![GroupHom::zero(&top.row.nodes[0], &bottom.row.nodes[0])];
    for n in (top.lo..=top.hi).rev() {
        out.push(induced_cached(v[0], n, &top.caches[0], &bottom.caches[0])?);
        let l = induced_cached(v[1], n, &top.caches[1], &bottom.caches[1])?;
        let r = induced_cached(v[2], n, &top.caches[2], &bottom.caches[2])?;
        out.push(GroupHom::direct_sum(&l, &r));
        out.push(induced_cached(v[3], n, &top.caches[3], &bottom.caches[3])?);
    }
    out.push(GroupHom::zero(top.row.last(), bottom.row.last()));
    Ok(out)
}

/// One MV row, reported.
pub fn mayer_vietoris_report<T: Ring>(sq: &MvSquare<'_, T>) -> Result<LadderReport> {
    let (lo, hi) = sq.degree_window();
    let r = mv_row(sq, lo, hi)?;
    Ok(ladder_report(&[("MV", &r.row)], Vec::new()))
}

/// Two MV squares joined by chain maps on the four corners.
pub fn mayer_vietoris_ladder<T: Ring>(
    top: &MvSquare<'_, T>,
    bottom: &MvSquare<'_, T>,
    v: [&ChainMap<T>; 4],
) -> Result<LadderReport> {
    let (a, b) = top.degree_window();
    let (c, d) = bottom.degree_window();
    let (lo, hi) = (a.min(c), b.max(d));
    let t = mv_row(top, lo, hi)?;
    let bt = mv_row(bottom, lo, hi)?;
    let verticals = mv_verticals(&t, &bt, v)?;
    let squares = ladder_squares(&t.row, &bt.row, &verticals)?;
    Ok(ladder_report(&[("top", &t.row), ("bottom", &bt.row)], squares))
}
