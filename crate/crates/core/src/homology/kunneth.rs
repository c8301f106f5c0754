//! Künneth rows for joins: the cross product on reduced homology, its
//! injectivity, and the Tor cokernel.

use std::collections::BTreeMap;

use serde::Serialize;

use super::chain::{Chains, SimplicialChains};
use super::embedded::inf_complex;
use super::ladder::{HomologyCache, SquareReport};
use super::maps::{projection_chain_map, sort_with_sign, ChainMap};
use crate::error::{Error, Result};
use crate::hyper::{Edge, Graded, Hyperdigraph};
use crate::linalg::{tensor_fgab, tor_fgab, FgAbGroup, GroupHom, LatticeSolver, Matrix, Presentation, Ring};

pub(crate) fn ring_gcd<T: Ring>(a: &T, b: &T) -> T {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.quo_rem(&y).1;
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        x.clone() * x.normalizing_unit()
    }
}

/// `⊕_{i+j=m−1} H̃_i(K) ⊗ H̃_j(K')` on pairs of generators.
#[derive(Debug, Clone)]
pub struct TensorNode<T> {
    pub presentation: Presentation<T>,
    /// `(i, j, g, h)` for each kept generator `g ⊗ h`.
    pub gens: Vec<(i64, i64, usize, usize)>,
    index: BTreeMap<(i64, i64, usize, usize), usize>,
}

impl<T: Ring> TensorNode<T> {
    fn new(m: i64, left: &HomologyCache<T>, right: &HomologyCache<T>, lwin: (i64, i64), rwin: (i64, i64)) -> Self {
        let mut orders = Vec::new();
        let mut gens = Vec::new();
        for i in lwin.0..=lwin.1 {
            let j = m - 1 - i;
            if j < rwin.0 || j > rwin.1 {
                continue;
            }
            let (a, b) = (&left.at(i).presentation, &right.at(j).presentation);
            for (g, og) in a.orders.iter().enumerate() {
                for (h, oh) in b.orders.iter().enumerate() {
                    let o = ring_gcd(og, oh);
                    if !o.is_zero() && o.is_unit() {
                        continue;
                    }
                    orders.push(o);
                    gens.push((i, j, g, h));
                }
            }
        }
        let index = gens.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        TensorNode { presentation: Presentation::new(orders), gens, index }
    }
}

/// Cross product of reduced chains, in the join's ambient coordinates.
fn cross_ambient<T: Ring>(
    k: &dyn Chains<T>,
    i: i64,
    z: &[T],
    k2: &dyn Chains<T>,
    j: i64,
    w: &[T],
    join: &SimplicialChains<T>,
) -> Result<Vec<T>> {
    let zs = k.to_ambient(i, z);
    let ws = k2.to_ambient(j, w);
    let (ga, gb) = (k.ambient().generators(i), k2.ambient().generators(j));
    let m = i + j + 1;
    let mut out = vec![T::zero(); join.complex.rank(m)];
    for (a, s) in zs.iter().zip(ga) {
        if a.is_zero() {
            continue;
        }
        for (b, t) in ws.iter().zip(gb) {
            if b.is_zero() {
                continue;
            }
            let mut st = s.clone();
            st.extend(t.iter().copied());
            let (sign, simplex) = if join.directed { (1, st) } else { sort_with_sign(&st) };
            let idx = join.index_of(&simplex).ok_or(Error::ImageOutsideTarget(m))?;
            let c = a.clone() * b.clone() * T::embed(sign, join.ctx());
            out[idx] = out[idx].clone() + c;
        }
    }
    Ok(out)
}

fn to_basis<T: Ring>(c: &dyn Chains<T>, n: i64, x: Vec<T>) -> Result<Vec<T>> {
    match c.basis(n) {
        None => Ok(x),
        Some(b) if b.cols() == 0 => {
            if x.iter().all(|v| v.is_zero()) {
                Ok(Vec::new())
            } else {
                Err(Error::ImageOutsideTarget(n))
            }
        }
        Some(b) => LatticeSolver::new(b).solve(&x).ok_or(Error::ImageOutsideTarget(n)),
    }
}

/// One Künneth row: for every degree `m` of the join, the tensor node and
/// the cross map into `H̃_m(K * K')`.
pub struct KunnethRow<T> {
    pub window: (i64, i64),
    pub tensors: Vec<TensorNode<T>>,
    pub cross: Vec<GroupHom<T>>,
    pub join_groups: Vec<FgAbGroup>,
    pub tor_groups: Vec<FgAbGroup>,
    pub left: HomologyCache<T>,
    pub right: HomologyCache<T>,
    pub joined: HomologyCache<T>,
}

fn window<T: Ring>(c: &dyn Chains<T>) -> (i64, i64) {
    let x = c.complex();
    (x.min_degree(), x.top_degree().max(x.min_degree()))
}

pub fn kunneth_row<T: Ring>(k: &dyn Chains<T>, k2: &dyn Chains<T>, join: &dyn Chains<T>) -> Result<KunnethRow<T>> {
    let (lw, rw) = (window(k), window(k2));
    let jw = (-1, (lw.1 + rw.1 + 1).max(window(join).1));
    let left = HomologyCache::new(k, lw.0, lw.1);
    let right = HomologyCache::new(k2, rw.0, rw.1);
    let joined = HomologyCache::new(join, jw.0, jw.1);
    let mut tensors = Vec::new();
    let mut cross = Vec::new();
    let mut join_groups = Vec::new();
    let mut tor_groups = Vec::new();
    for m in jw.0..=jw.1 {
        let t = TensorNode::new(m, &left, &right, lw, rw);
        let target = joined.at(m);
        let mut cols = Vec::with_capacity(t.gens.len());
        for &(i, j, g, h) in &t.gens {
            let z = left.at(i).representative(g);
            let w = right.at(j).representative(h);
            let amb = cross_ambient(k, i, &z, k2, j, &w, join.ambient())?;
            cols.push(target.coords(&to_basis(join, m, amb)?)?);
        }
        let mat = Matrix::from_columns(&cols, target.num_generators());
        cross.push(GroupHom::new(t.presentation.clone(), target.presentation.clone(), mat)?);
        let mut tor = FgAbGroup::zero();
        for i in lw.0..=lw.1 {
            let j = m - 2 - i;
            if j >= rw.0 && j <= rw.1 {
                tor = tor.direct_sum(&tor_fgab(&left.at(i).group(), &right.at(j).group()));
            }
        }
        tor_groups.push(tor);
        join_groups.push(target.group());
        tensors.push(t);
    }
    Ok(KunnethRow { window: jw, tensors, cross, join_groups, tor_groups, left, right, joined })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KunnethDegree {
    /// Reduced degree in the join.
    pub n: i64,
    pub tensor: FgAbGroup,
    pub join: FgAbGroup,
    pub tor: FgAbGroup,
    pub cross_injective: bool,
    pub cokernel_is_tor: bool,
    pub splits: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KunnethReport {
    pub rows: Vec<Vec<KunnethDegree>>,
    pub squares: Vec<SquareReport>,
    pub exact: bool,
    pub squares_commute: bool,
}

impl<T: Ring> KunnethRow<T> {
    pub fn degrees(&self) -> Vec<KunnethDegree> {
        (0..self.cross.len())
            .map(|idx| {
                let c = &self.cross[idx];
                let tensor = self.tensors[idx].presentation.group();
                let tor = self.tor_groups[idx].clone();
                let join = self.join_groups[idx].clone();
                let direct = tensor.direct_sum(&tor);
                let expected_tensor = self.expected_tensor(self.window.0 + idx as i64);
                KunnethDegree {
                    n: self.window.0 + idx as i64,
                    cross_injective: c.is_injective(),
                    cokernel_is_tor: c.cokernel() == tor,
                    splits: join == direct && tensor == expected_tensor,
                    tensor,
                    join,
                    tor,
                }
            })
            .collect()
    }

    fn expected_tensor(&self, m: i64) -> FgAbGroup {
        let mut g = FgAbGroup::zero();
        for (&i, p) in self.left.pres_map() {
            let j = m - 1 - i;
            if let Some(q) = self.right.pres_map().get(&j) {
                g = g.direct_sum(&tensor_fgab(&p.group(), &q.group()));
            }
        }
        g
    }
}

fn degrees_ok(d: &[KunnethDegree]) -> bool {
    d.iter().all(|x| x.cross_injective && x.cokernel_is_tor && x.splits)
}

/// `π⊗π` between the tensor nodes of two rows.
fn tensor_of_maps<T: Ring>(
    top: &KunnethRow<T>,
    bottom: &KunnethRow<T>,
    idx: usize,
    bidx: usize,
    f: &ChainMap<T>,
    g: &ChainMap<T>,
) -> Result<GroupHom<T>> {
    let (ts, tt) = (&top.tensors[idx], &bottom.tensors[bidx]);
    let mut fi: BTreeMap<i64, GroupHom<T>> = BTreeMap::new();
    let mut gj: BTreeMap<i64, GroupHom<T>> = BTreeMap::new();
    let mut cols = Vec::with_capacity(ts.gens.len());
    for &(i, j, a, b) in &ts.gens {
        let (Some(bl), Some(br)) = (bottom.left.get(i), bottom.right.get(j)) else {
            cols.push(vec![T::zero(); tt.gens.len()]);
            continue;
        };
        if let std::collections::btree_map::Entry::Vacant(e) = fi.entry(i) {
            e.insert(f.induced_at(i, top.left.at(i), bl)?);
        }
        if let std::collections::btree_map::Entry::Vacant(e) = gj.entry(j) {
            e.insert(g.induced_at(j, top.right.at(j), br)?);
        }
        let (fm, gm) = (&fi[&i].matrix, &gj[&j].matrix);
        let mut col = vec![T::zero(); tt.gens.len()];
        for k in 0..fm.rows() {
            let x = fm.get(k, a);
            if x.is_zero() {
                continue;
            }
            for l in 0..gm.rows() {
                let y = gm.get(l, b);
                if y.is_zero() {
                    continue;
                }
                if let Some(&pos) = tt.index.get(&(i, j, k, l)) {
                    col[pos] = col[pos].clone() + x.clone() * y;
                }
            }
        }
        cols.push(col);
    }
    GroupHom::new(ts.presentation.clone(), tt.presentation.clone(), Matrix::from_columns(&cols, tt.gens.len()))
}

/// Künneth row for a pair of (directed) complexes on disjoint vertex sets,
/// using augmented chains.
pub fn kunneth<E: Edge, T: Ring>(k: &Graded<E>, k2: &Graded<E>, ctx: &T::Ctx) -> Result<KunnethReport> {
    let j = k.join(k2)?;
    let (a, b, c) = (
        SimplicialChains::<T>::new(k, true, ctx)?,
        SimplicialChains::<T>::new(k2, true, ctx)?,
        SimplicialChains::<T>::new(&j, true, ctx)?,
    );
    let row = kunneth_row(&a, &b, &c)?;
    let d = row.degrees();
    Ok(KunnethReport { exact: degrees_ok(&d), rows: vec![d], squares: Vec::new(), squares_commute: true })
}

/// Two Künneth rows `(K, K', K*K')` joined by chain maps on the three
/// complexes; squares compare the cross products.
pub fn kunneth_ladder<T: Ring>(
    top: [&dyn Chains<T>; 3],
    bottom: [&dyn Chains<T>; 3],
    v: [&ChainMap<T>; 3],
) -> Result<KunnethReport> {
    let rt = kunneth_row(top[0], top[1], top[2])?;
    let rb = kunneth_row(bottom[0], bottom[1], bottom[2])?;
    let mut squares = Vec::new();
    for idx in 0..rt.cross.len() {
        let m = rt.window.0 + idx as i64;
        let Some(bidx) = (m - rb.window.0).try_into().ok().filter(|&b: &usize| b < rb.cross.len()) else {
            continue;
        };
        let pp = tensor_of_maps(&rt, &rb, idx, bidx, v[0], v[1])?;
        let pj = v[2].induced_at(m, rt.joined.at(m), rb.joined.at(m))?;
        let lhs = rt.cross[idx].then(&pj);
        let rhs = pp.then(&rb.cross[bidx]);
        squares.push(SquareReport { from: format!("T{m}"), n: m, commutes: lhs.same_as(&rhs) });
    }
    let (dt, db) = (rt.degrees(), rb.degrees());
    Ok(KunnethReport {
        exact: degrees_ok(&dt) && degrees_ok(&db),
        squares_commute: squares.iter().all(|s| s.commutes),
        rows: vec![dt, db],
        squares,
    })
}

/// Künneth rows for `K⃗ * K⃗'` and the underlying `K * K'`, joined by `π`.
/// With `embedded`, the rows use Inf complexes of the given hyperdigraphs.
pub fn kunneth_projection_ladder<T: Ring>(
    k: &Hyperdigraph,
    k2: &Hyperdigraph,
    embedded: bool,
    ctx: &T::Ctx,
) -> Result<KunnethReport> {
    let (u, u2) = (k.underlying(), k2.underlying());
    let (jd, ju) = (k.join(k2)?, u.join(&u2)?);
    let build = |top: [&dyn Chains<T>; 3], bottom: [&dyn Chains<T>; 3]| -> Result<KunnethReport> {
        let pis = (0..3).map(|i| projection_chain_map(top[i], bottom[i])).collect::<Result<Vec<_>>>()?;
        kunneth_ladder(top, bottom, [&pis[0], &pis[1], &pis[2]])
    };
    if embedded {
        let top = [inf_complex::<_, T>(k, true, ctx)?, inf_complex::<_, T>(k2, true, ctx)?, inf_complex::<_, T>(&jd, true, ctx)?];
        let bot = [inf_complex::<_, T>(&u, true, ctx)?, inf_complex::<_, T>(&u2, true, ctx)?, inf_complex::<_, T>(&ju, true, ctx)?];
        build([&top[0], &top[1], &top[2]], [&bot[0], &bot[1], &bot[2]])
    } else {
        let top = [
            SimplicialChains::<T>::new(k, true, ctx)?,
            SimplicialChains::<T>::new(k2, true, ctx)?,
            SimplicialChains::<T>::new(&jd, true, ctx)?,
        ];
        let bot = [
            SimplicialChains::<T>::new(&u, true, ctx)?,
            SimplicialChains::<T>::new(&u2, true, ctx)?,
            SimplicialChains::<T>::new(&ju, true, ctx)?,
        ];
        build([&top[0], &top[1], &top[2]], [&bot[0], &bot[1], &bot[2]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hyper::Hypergraph;
    use crate::linalg::{Fp, Integer, Rational};

    /// Six-vertex triangulation of the real projective plane.
    pub(crate) fn rp2(offset: u32) -> Hypergraph {
        let f = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2], [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]];
        let lists: Vec<Vec<u32>> = f.iter().map(|t| t.iter().map(|v| v + offset).collect()).collect();
        Hypergraph::from_lists(&lists).unwrap().delta_closure()
    }

    fn find(r: &KunnethReport, n: i64) -> &KunnethDegree {
        r.rows[0].iter().find(|d| d.n == n).unwrap()
    }

    #[test]
    fn two_point_spaces_join_to_a_circle() {
        let k = Graph::cycle(4).unwrap().independence_complex(None).unwrap();
        let k2 = k.offset(10);
        let r = kunneth::<_, Integer>(&k, &k2, &()).unwrap();
        assert!(r.exact);
        assert_eq!(find(&r, 1).join, FgAbGroup::free(1));
    }

    #[test]
    fn projective_planes_give_tor() {
        let r = kunneth::<_, Integer>(&rp2(0), &rp2(10), &()).unwrap();
        assert!(r.exact, "{r:?}");
        assert_eq!(find(&r, 3).tensor, FgAbGroup::cyclic(2));
        assert_eq!(find(&r, 4).tor, FgAbGroup::cyclic(2));
        assert_eq!(find(&r, 4).join, FgAbGroup::cyclic(2));
    }

    #[test]
    fn cone_is_acyclic_over_fields() {
        let k = Graph::cycle(5).unwrap().independence_complex(None).unwrap();
        let pt = Hypergraph::from_lists(&[vec![20]]).unwrap();
        let r = kunneth::<_, Rational>(&k, &pt, &()).unwrap();
        assert!(r.exact && r.rows[0].iter().all(|d| d.join.is_trivial()));
        let r = kunneth::<_, Fp>(&k, &pt, &3).unwrap();
        assert!(r.exact);
    }

    #[test]
    fn directed_ladder_squares_commute() {
        let a = Graph::path(2).unwrap().directed_independence_complex(None).unwrap();
        let b = Graph::empty(2).offset(10).directed_independence_complex(None).unwrap();
        let r = kunneth_projection_ladder::<Integer>(&a, &b, false, &()).unwrap();
        assert!(r.exact && r.squares_commute, "{r:?}");
    }
}
