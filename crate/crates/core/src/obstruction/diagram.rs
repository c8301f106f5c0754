//! Homology diagrams induced by regular maps: the projection square, the
//! Mayer-Vietoris ladders and the Künneth ladders.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{require_k_regular, EmbeddingAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::chain::{Chains, SimplicialChains};
use crate::homology::embedded::{homology_table, inf_complex, DegreeGroup};
use crate::homology::kunneth::{kunneth_ladder, kunneth_projection_ladder, KunnethReport};
use crate::homology::ladder::{homology_square, mayer_vietoris_ladder, LadderReport, MvSquare, SquareReport};
use crate::homology::maps::{projection_chain_map, vertex_map_chain_map};
use crate::homology::mv::{embedded_mayer_vietoris, mayer_vietoris_projection_ladder, EmbeddedMvReport};
use crate::hyper::{Edge, Graded, Hyperdigraph, Hypergraph, VertexId};
use crate::linalg::Ring;
use crate::matroid::{DirectedMatroid, Matroid, VectorSet};

type Boxed<T> = Box<dyn Chains<T>>;

fn chains<E: Edge, T: Ring + 'static>(h: &Graded<E>, inf: bool, augmented: bool, ctx: &T::Ctx) -> Result<Boxed<T>> {
    Ok(if inf {
        Box::new(inf_complex::<E, T>(h, augmented, ctx)?)
    } else {
        Box::new(SimplicialChains::<T>::new(h, augmented, ctx)?)
    })
}

fn check_sub(h: &Hyperdigraph, full: &Hyperdigraph) -> Result<()> {
    if h.edges().all(|e| full.contains(e)) {
        Ok(())
    } else {
        Err(Error::UnderlyingMismatch)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Corner {
    pub name: String,
    pub degrees: Vec<DegreeGroup>,
}

/// The square `H(H⃗) → H(M⃗)` over `H(H) → H(M)` with `π_*` verticals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagramReport {
    pub k: usize,
    pub embedded: bool,
    pub corners: Vec<Corner>,
    pub squares: Vec<SquareReport>,
    pub squares_commute: bool,
}

/// Projection square for a k-regular `f`. Without `sub` the corners are
/// `sk^{k−1}Ind⃗(g)`, `sk^{k−1}Ind(g)` and the matroid complexes; with it,
/// the Inf complexes of `sub ⊆ sk^{k−1}Ind⃗(g)` and of its underlying
/// hypergraph.
pub fn induced_diagram_report<T: Ring + 'static>(
    g: &Graph,
    f: &EmbeddingAssignment,
    k: usize,
    s: &VectorSet,
    sub: Option<&Hyperdigraph>,
    ctx: &T::Ctx,
) -> Result<DiagramReport> {
    let m = Matroid::vectorial(s, Some(k));
    require_k_regular(g, f, k, &m)?;
    let ind_d = g.directed_independence_complex(Some(k))?;
    let md = DirectedMatroid::full_orbit_of(&m)?;
    let (a, c) = match sub {
        Some(h) => {
            check_sub(h, &ind_d)?;
            (chains::<_, T>(h, true, false, ctx)?, chains::<_, T>(&h.underlying(), true, false, ctx)?)
        }
        None => (chains::<_, T>(&ind_d, false, false, ctx)?, chains::<_, T>(&ind_d.underlying(), false, false, ctx)?),
    };
    let b = SimplicialChains::<T>::new(md.complex(), false, ctx)?;
    let d = SimplicialChains::<T>::new(m.complex(), false, ctx)?;
    let top = vertex_map_chain_map(&*a, &b, &f.map)?;
    let bottom = vertex_map_chain_map(&*c, &d, &f.map)?;
    let left = projection_chain_map(&*a, &*c)?;
    let right = projection_chain_map(&b, &d)?;
    let squares = homology_square(&*a, &b, &*c, &d, &top, &bottom, &left, &right)?;
    let corner = |name: &str, x: &dyn Chains<T>| Corner { name: name.into(), degrees: homology_table(x) };
    Ok(DiagramReport {
        k,
        embedded: sub.is_some(),
        corners: vec![corner("H(Ind_dir)", &*a), corner("H(M_dir)", &b), corner("H(Ind)", &*c), corner("H(M)", &d)],
        squares_commute: squares.iter().all(|s| s.commutes),
        squares,
    })
}

fn image_labels(f: &EmbeddingAssignment, g: &Graph) -> BTreeSet<VertexId> {
    g.vertices().map(|v| f.map[&v]).collect()
}

/// MV ladder of two complex pairs joined by a vertex map on all corners.
fn mv_map_ladder<E: Edge, T: Ring>(
    top: (&Graded<E>, &Graded<E>),
    bottom: (&Graded<E>, &Graded<E>),
    phi: &EmbeddingAssignment,
    ctx: &T::Ctx,
) -> Result<LadderReport> {
    let four = |a: &Graded<E>, b: &Graded<E>| -> Result<[SimplicialChains<T>; 4]> {
        Ok([
            SimplicialChains::new(&a.intersection(b), false, ctx)?,
            SimplicialChains::new(a, false, ctx)?,
            SimplicialChains::new(b, false, ctx)?,
            SimplicialChains::new(&a.union(b), false, ctx)?,
        ])
    };
    let t = four(top.0, top.1)?;
    let b = four(bottom.0, bottom.1)?;
    let sq_t = MvSquare::of_inclusions(&t[0], &t[1], &t[2], &t[3])?;
    let sq_b = MvSquare::of_inclusions(&b[0], &b[1], &b[2], &b[3])?;
    let v = (0..4).map(|i| vertex_map_chain_map(&t[i], &b[i], &phi.map)).collect::<Result<Vec<_>>>()?;
    mayer_vietoris_ladder(&sq_t, &sq_b, [&v[0], &v[1], &v[2], &v[3]])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MvObstructionReport {
    pub k: usize,
    /// MV of `(Ind⃗(L'), Ind⃗(L''))` over the underlying pair, `π_*` verticals.
    pub independence_projection: LadderReport,
    /// Same for the matroid pair `(M⃗', M⃗'')`.
    pub matroid_projection: LadderReport,
    /// `f_*` from the independence pair to the matroid pair.
    pub map_undirected: LadderReport,
    pub map_directed: LadderReport,
    /// Hyperdigraph variant on the top layers `Conf_k(L')`, `Conf_k(L'')`.
    /// Reported only; not part of the overall verdicts.
    pub embedded_layers: EmbeddedMvReport,
    pub exact: bool,
    pub squares_commute: bool,
}

/// Main-result MV diagram for `L' = G' *̃ G'''` and `L'' = G'' *̃ G'''`,
/// mapped into the matroids on `f'(V') ∪ f'''(V''')` and
/// `f''(V'') ∪ f'''(V''')`.
#[allow(clippy::too_many_arguments)]
pub fn mv_obstruction_report<T: Ring>(
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
    f1: &EmbeddingAssignment,
    f2: &EmbeddingAssignment,
    f3: &EmbeddingAssignment,
    k: usize,
    s: &VectorSet,
    ctx: &T::Ctx,
) -> Result<MvObstructionReport> {
    let m = Matroid::vectorial(s, Some(k));
    for (g, f) in [(g1, f1), (g2, f2), (g3, f3)] {
        require_k_regular(g, f, k, &m)?;
    }
    let (l1, l2) = (g1.reduced_join(g3)?, g2.reduced_join(g3)?);
    g1.disjoint_union(g2)?;
    let phi = f1.merge(f2)?.merge(f3)?;
    let lab3 = image_labels(f3, g3);
    let m1 = Matroid::vectorial(&s.restrict(&image_labels(f1, g1).union(&lab3).copied().collect())?, Some(k));
    let m2 = Matroid::vectorial(&s.restrict(&image_labels(f2, g2).union(&lab3).copied().collect())?, Some(k));
    let (md1, md2) = (DirectedMatroid::full_orbit_of(&m1)?, DirectedMatroid::full_orbit_of(&m2)?);
    let (kd1, kd2) = (l1.directed_independence_complex(Some(k))?, l2.directed_independence_complex(Some(k))?);
    let (k1, k2) = (kd1.underlying(), kd2.underlying());

    let independence_projection = mayer_vietoris_projection_ladder::<T>(&kd1, &kd2, false, ctx)?;
    let matroid_projection = mayer_vietoris_projection_ladder::<T>(md1.complex(), md2.complex(), false, ctx)?;
    let map_undirected = mv_map_ladder::<_, T>((&k1, &k2), (m1.complex(), m2.complex()), &phi, ctx)?;
    let map_directed = mv_map_ladder::<_, T>((&kd1, &kd2), (md1.complex(), md2.complex()), &phi, ctx)?;
    let embedded_layers = embedded_mayer_vietoris::<T>(&l1.conf(k), &l2.conf(k), ctx)?;
    let all = [&independence_projection, &matroid_projection, &map_undirected, &map_directed];
    Ok(MvObstructionReport {
        k,
        exact: all.iter().all(|l| l.exact),
        squares_commute: all.iter().all(|l| l.squares_commute),
        independence_projection,
        matroid_projection,
        map_undirected,
        map_directed,
        embedded_layers,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KunnethObstructionReport {
    pub k: usize,
    pub k2: usize,
    /// `Ind(G)*Ind(G')` equals the bounded part of `Ind(G ⊔ G')`.
    pub independence_join_identity: bool,
    /// `M*M'` equals the bounded part of the block-sum matroid.
    pub block_sum_is_join: bool,
    /// `(f, f')` is `(G, k; G', k')`-regular into the block sum.
    pub product_regular: bool,
    pub map_undirected: KunnethReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map_directed: Option<KunnethReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_projection: Option<KunnethReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroid_projection: Option<KunnethReport>,
    pub exact: bool,
    pub squares_commute: bool,
}

/// Sets with at most `k` vertices in `a` and at most `k2` in `b`.
fn bounded<E: Edge>(h: &Graded<E>, a: &BTreeSet<VertexId>, k: usize, k2: usize) -> BTreeSet<E> {
    h.edges()
        .filter(|e| {
            let inside = e.vertices().iter().filter(|v| a.contains(v)).count();
            inside <= k && e.len() - inside <= k2
        })
        .cloned()
        .collect()
}

fn edge_set<E: Edge>(h: &Graded<E>) -> BTreeSet<E> {
    h.edges().cloned().collect()
}

/// Main-result Künneth diagram for `f: G → S`, `f': G' → S'` and the
/// block map `(f, f')` into `(S, 0) ⊔ (0, S')`. With `subs`, the
/// independence side is replaced by Inf complexes of sub-hyperdigraphs of
/// the directed skeleta. `directed` adds the directed and projection
/// ladders.
#[allow(clippy::too_many_arguments)]
pub fn kunneth_obstruction_report<T: Ring + 'static>(
    g: &Graph,
    g2: &Graph,
    f: &EmbeddingAssignment,
    f2: &EmbeddingAssignment,
    (k, k2): (usize, usize),
    (s, s2): (&VectorSet, &VectorSet),
    subs: Option<(&Hyperdigraph, &Hyperdigraph)>,
    directed: bool,
    ctx: &T::Ctx,
) -> Result<KunnethObstructionReport> {
    let (m, m2) = (Matroid::vectorial(s, Some(k)), Matroid::vectorial(s2, Some(k2)));
    require_k_regular(g, f, k, &m)?;
    require_k_regular(g2, f2, k2, &m2)?;
    let t = s.block_sum(s2)?;
    let gg = g.disjoint_union(g2)?;
    let phi = f.merge(f2)?;

    let (kd, kd2) = (g.directed_independence_complex(Some(k))?, g2.directed_independence_complex(Some(k2))?);
    let (ku, ku2) = (kd.underlying(), kd2.underlying());
    let vs: BTreeSet<VertexId> = g.vertices().collect();
    let whole = gg.independence_complex(Some(k + k2))?;
    let independence_join_identity = edge_set(&ku.join(&ku2)?) == bounded(&whole, &vs, k, k2);
    let labels: BTreeSet<VertexId> = s.labels().collect();
    let mt = Matroid::vectorial(&t, Some(k + k2));
    let block_sum_is_join = edge_set(&m.complex().join(m2.complex())?) == bounded(mt.complex(), &labels, k, k2);
    let mut product_regular = true;
    for e in bounded(&whole, &vs, k, k2) {
        let img: Vec<VertexId> = e.vertices().iter().map(|v| phi.map[v]).collect();
        if !mt.is_independent(&img)? {
            product_regular = false;
            break;
        }
    }

    let (md, md2) = (DirectedMatroid::full_orbit_of(&m)?, DirectedMatroid::full_orbit_of(&m2)?);
    let map_ladder = |a: [Boxed<T>; 3], b: [SimplicialChains<T>; 3]| -> Result<KunnethReport> {
        let v = (0..3).map(|i| vertex_map_chain_map(&*a[i], &b[i], &phi.map)).collect::<Result<Vec<_>>>()?;
        kunneth_ladder([&*a[0], &*a[1], &*a[2]], [&b[0], &b[1], &b[2]], [&v[0], &v[1], &v[2]])
    };
    let sc = |h: &Hypergraph| SimplicialChains::<T>::new(h, true, ctx);
    let scd = |h: &Hyperdigraph| SimplicialChains::<T>::new(h, true, ctx);
    let inf = subs.is_some();
    let (hd, hd2) = match subs {
        Some((h, h2)) => {
            check_sub(h, &kd)?;
            check_sub(h2, &kd2)?;
            (h.clone(), h2.clone())
        }
        None => (kd.clone(), kd2.clone()),
    };
    let (hu, hu2) = (hd.underlying(), hd2.underlying());
    let map_undirected = map_ladder(
        [chains(&hu, inf, true, ctx)?, chains(&hu2, inf, true, ctx)?, chains(&hu.join(&hu2)?, inf, true, ctx)?],
        [sc(m.complex())?, sc(m2.complex())?, sc(&m.complex().join(m2.complex())?)?],
    )?;
    let (mut map_directed, mut independence_projection, mut matroid_projection) = (None, None, None);
    if directed {
        map_directed = Some(map_ladder(
            [chains(&hd, inf, true, ctx)?, chains(&hd2, inf, true, ctx)?, chains(&hd.join(&hd2)?, inf, true, ctx)?],
            [scd(md.complex())?, scd(md2.complex())?, scd(&md.complex().join(md2.complex())?)?],
        )?);
        independence_projection = Some(kunneth_projection_ladder::<T>(&hd, &hd2, inf, ctx)?);
        matroid_projection = Some(kunneth_projection_ladder::<T>(md.complex(), md2.complex(), false, ctx)?);
    }
    let reports: Vec<&KunnethReport> =
        [Some(&map_undirected), map_directed.as_ref(), independence_projection.as_ref(), matroid_projection.as_ref()]
            .into_iter()
            .flatten()
            .collect();
    Ok(KunnethObstructionReport {
        k,
        k2,
        independence_join_identity,
        block_sum_is_join,
        product_regular,
        exact: reports.iter().all(|r| r.exact),
        squares_commute: reports.iter().all(|r| r.squares_commute),
        map_undirected,
        map_directed,
        independence_projection,
        matroid_projection,
    })
}
