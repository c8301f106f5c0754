//! Mayer-Vietoris reports for complexes, directed/undirected ladders, and
//! the embedded version for hyperdigraph pairs.

use serde::Serialize;

use super::chain::{Chains, SimplicialChains};
use super::embedded::inf_complex;
use super::ladder::{mayer_vietoris_ladder, mayer_vietoris_report, LadderReport, MvSquare};
use super::maps::projection_chain_map;
use crate::error::Result;
use crate::hyper::{Edge, Graded, Hyperdigraph, Hypergraph};
use crate::linalg::Ring;

/// Single MV row for two (directed) simplicial complexes on one vertex set.
pub fn mayer_vietoris<E: Edge, T: Ring>(k: &Graded<E>, k2: &Graded<E>, augmented: bool, ctx: &T::Ctx) -> Result<LadderReport> {
    let c = |g: &Graded<E>| SimplicialChains::<T>::new(g, augmented, ctx);
    let (i, a, b, u) = (c(&k.intersection(k2))?, c(k)?, c(k2)?, c(&k.union(k2))?);
    let sq = MvSquare::of_inclusions(&i, &a, &b, &u)?;
    mayer_vietoris_report(&sq)
}

/// MV rows of `(K⃗, K⃗')` and of the underlying `(K, K')`, joined by `π_*`.
pub fn mayer_vietoris_projection_ladder<T: Ring>(
    k: &Hyperdigraph,
    k2: &Hyperdigraph,
    augmented: bool,
    ctx: &T::Ctx,
) -> Result<LadderReport> {
    let cd = |g: &Hyperdigraph| SimplicialChains::<T>::new(g, augmented, ctx);
    let cu = |g: &Hypergraph| SimplicialChains::<T>::new(g, augmented, ctx);
    let (u1, u2) = (k.underlying(), k2.underlying());
    let top = [cd(&k.intersection(k2))?, cd(k)?, cd(k2)?, cd(&k.union(k2))?];
    let bottom = [cu(&u1.intersection(&u2))?, cu(&u1)?, cu(&u2)?, cu(&u1.union(&u2))?];
    let sq_top = MvSquare::of_inclusions(&top[0], &top[1], &top[2], &top[3])?;
    let sq_bottom = MvSquare::of_inclusions(&bottom[0], &bottom[1], &bottom[2], &bottom[3])?;
    let pis = (0..4).map(|i| projection_chain_map(&top[i], &bottom[i])).collect::<Result<Vec<_>>>()?;
    mayer_vietoris_ladder(&sq_top, &sq_bottom, [&pis[0], &pis[1], &pis[2], &pis[3]])
}

/// Hypothesis (II): any two edges from the two underlying hypergraphs meet
/// in the empty set or in a common edge.
pub fn intersections_are_shared(h: &Hypergraph, h2: &Hypergraph) -> bool {
    let common = h.intersection(h2);
    h.edges().all(|s| {
        h2.edges().all(|t| {
            let meet: Vec<_> = s.vertices().iter().filter(|v| t.vertices().contains(v)).copied().collect();
            meet.is_empty() || common.contains(&crate::hyper::Hyperedge::from_valid(meet))
        })
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddedMvReport {
    /// (I): both hyperdigraphs are Σ-invariant.
    pub sigma_invariant: bool,
    /// (II): edge intersections lie in the common part.
    pub intersections_shared: bool,
    pub precondition_met: bool,
    pub ladder: Option<LadderReport>,
    /// Set when the zig-zag lift could not be built.
    pub construction_error: Option<String>,
}

/// Embedded-homology MV ladder on Inf complexes: directed row over the
/// underlying row, joined by `π_*`. Only attempted when (I) and (II) hold.
pub fn embedded_mayer_vietoris<T: Ring>(h: &Hyperdigraph, h2: &Hyperdigraph, ctx: &T::Ctx) -> Result<EmbeddedMvReport> {
    let sigma_invariant = h.is_sigma_invariant() && h2.is_sigma_invariant();
    let (u1, u2) = (h.underlying(), h2.underlying());
    let intersections_shared = intersections_are_shared(&u1, &u2);
    let precondition_met = sigma_invariant && intersections_shared;
    let mut report = EmbeddedMvReport { sigma_invariant, intersections_shared, precondition_met, ladder: None, construction_error: None };
    if !precondition_met {
        return Ok(report);
    }
    let top = [
        inf_complex::<_, T>(&h.intersection(h2), false, ctx)?,
        inf_complex::<_, T>(h, false, ctx)?,
        inf_complex::<_, T>(h2, false, ctx)?,
        inf_complex::<_, T>(&h.union(h2), false, ctx)?,
    ];
    let bottom = [
        inf_complex::<_, T>(&u1.intersection(&u2), false, ctx)?,
        inf_complex::<_, T>(&u1, false, ctx)?,
        inf_complex::<_, T>(&u2, false, ctx)?,
        inf_complex::<_, T>(&u1.union(&u2), false, ctx)?,
    ];
    let built = (|| {
        let sq_top = MvSquare::of_inclusions(&top[0], &top[1], &top[2], &top[3])?;
        let sq_bottom = MvSquare::of_inclusions(&bottom[0], &bottom[1], &bottom[2], &bottom[3])?;
        let pis = (0..4).map(|i| projection_chain_map(&top[i], &bottom[i])).collect::<Result<Vec<_>>>()?;
        mayer_vietoris_ladder(&sq_top, &sq_bottom, [&pis[0], &pis[1], &pis[2], &pis[3]])
    })();
    match built {
        Ok(l) => report.ladder = Some(l),
        Err(e) => report.construction_error = Some(e.to_string()),
    }
    Ok(report)
}

/// Convenience for callers holding plain chain objects.
pub fn mv_of_chains<T: Ring>(parts: [&dyn Chains<T>; 4]) -> Result<LadderReport> {
    let sq = MvSquare::of_inclusions(parts[0], parts[1], parts[2], parts[3])?;
    mayer_vietoris_report(&sq)
}
