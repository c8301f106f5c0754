//! Hyperedges, directed hyperedges and their graded families.
//!
//! Both kinds share one container, [`Graded`], parameterized by the edge
//! type. Directed-only operations (orbits, symmetric closure, underlying
//! projection) live on [`Hyperdigraph`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on hyperedge size for orbit enumeration.
pub const DEFAULT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

pub fn vids(v: &[u32]) -> Vec<VertexId> {
    v.iter().map(|&x| VertexId(x)).collect()
}

/// Shared behaviour of hyperedges and directed hyperedges.
pub trait Edge: Clone + Ord + fmt::Debug + Send + Sync {
    const DIRECTED: bool;
    fn vertices(&self) -> &[VertexId];
    /// Builds from a vertex list already known to be valid for this kind.
    fn from_valid(v: Vec<VertexId>) -> Self;
    /// The cross edge `σ * σ'` of a join.
    fn concat(&self, other: &Self) -> Self;

    fn len(&self) -> usize {
        self.vertices().len()
    }

    fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    /// Codimension-one faces (deleting each position once), empty for
    /// singletons.
    fn facets(&self) -> Vec<Self> {
        let v = self.vertices();
        if v.len() < 2 {
            return Vec::new();
        }
        (0..v.len())
            .map(|i| {
                let mut w = v.to_vec();
                w.remove(i);
                Self::from_valid(w)
            })
            .collect()
    }

    /// All non-empty subsequences, including the edge itself.
    fn subfaces(&self) -> Vec<Self> {
        let v = self.vertices();
        let n = v.len();
        (1u64..(1u64 << n))
            .map(|mask| Self::from_valid((0..n).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect()))
            .collect()
    }
}

fn check_distinct(v: &[VertexId]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::EmptyEdge);
    }
    let mut seen = BTreeSet::new();
    for x in v {
        if !seen.insert(*x) {
            return Err(Error::RepeatedVertex(x.0));
        }
    }
    Ok(())
}

/// Ordered tuple of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedHyperedge(Vec<VertexId>);

impl DirectedHyperedge {
    pub fn new(v: Vec<VertexId>) -> Result<Self> {
        check_distinct(&v)?;
        Ok(DirectedHyperedge(v))
    }

    pub fn from_ids(v: &[u32]) -> Result<Self> {
        Self::new(vids(v))
    }

    /// All `k!` reorderings, in lexicographic order.
    pub fn orbit(&self) -> Vec<DirectedHyperedge> {
        let mut v = self.0.clone();
        v.sort();
        let mut out = vec![DirectedHyperedge(v.clone())];
        while next_permutation(&mut v) {
            out.push(DirectedHyperedge(v.clone()));
        }
        out
    }

    pub fn underlying(&self) -> Hyperedge {
        let mut v = self.0.clone();
        v.sort();
        Hyperedge(v)
    }
}

impl Edge for DirectedHyperedge {
    const DIRECTED: bool = true;
    fn vertices(&self) -> &[VertexId] {
        &self.0
    }
    fn from_valid(v: Vec<VertexId>) -> Self {
        DirectedHyperedge(v)
    }
    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        DirectedHyperedge(v)
    }
}

/// Set of distinct vertices, stored increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge(Vec<VertexId>);

impl Hyperedge {
    pub fn new(mut v: Vec<VertexId>) -> Result<Self> {
        check_distinct(&v)?;
        v.sort();
        Ok(Hyperedge(v))
    }

    pub fn from_ids(v: &[u32]) -> Result<Self> {
        Self::new(vids(v))
    }
}

impl Edge for Hyperedge {
    const DIRECTED: bool = false;
    fn vertices(&self) -> &[VertexId] {
        &self.0
    }
    fn from_valid(mut v: Vec<VertexId>) -> Self {
        v.sort();
        Hyperedge(v)
    }
    fn concat(&self, other: &Self) -> Self {
        Self::from_valid(self.0.iter().chain(&other.0).copied().collect())
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Graded family of edges with an explicit vertex universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graded<E> {
    levels: BTreeMap<usize, BTreeSet<E>>,
    universe: BTreeSet<VertexId>,
}

pub type Hypergraph = Graded<Hyperedge>;
pub type Hyperdigraph = Graded<DirectedHyperedge>;

impl<E: Edge> Default for Graded<E> {
    fn default() -> Self {
        Graded { levels: BTreeMap::new(), universe: BTreeSet::new() }
    }
}

impl<E: Edge> FromIterator<E> for Graded<E> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        let mut g = Graded::default();
        for e in iter {
            g.insert(e);
        }
        g
    }
}

impl<E: Edge> Graded<E> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from raw vertex lists, validating each edge.
    pub fn from_lists(lists: &[Vec<u32>]) -> Result<Self> {
        let mut g = Graded::default();
        for l in lists {
            check_distinct(&vids(l))?;
            g.insert(E::from_valid(vids(l)));
        }
        Ok(g)
    }

    pub fn insert(&mut self, e: E) -> bool {
        self.universe.extend(e.vertices().iter().copied());
        self.levels.entry(e.len()).or_default().insert(e)
    }

    pub fn contains(&self, e: &E) -> bool {
        self.levels.get(&e.len()).is_some_and(|s| s.contains(e))
    }

    /// Enlarges the vertex universe (edges untouched).
    pub fn with_universe(mut self, vs: impl IntoIterator<Item = VertexId>) -> Self {
        self.universe.extend(vs);
        self
    }

    pub fn universe(&self) -> &BTreeSet<VertexId> {
        &self.universe
    }

    pub fn level(&self, k: usize) -> impl Iterator<Item = &E> {
        self.levels.get(&k).into_iter().flat_map(|s| s.iter())
    }

    pub fn level_len(&self, k: usize) -> usize {
        self.levels.get(&k).map_or(0, |s| s.len())
    }

    /// Largest edge size present (0 when empty).
    pub fn max_len(&self) -> usize {
        self.levels.iter().rev().find(|(_, s)| !s.is_empty()).map_or(0, |(k, _)| *k)
    }

    pub fn len(&self) -> usize {
        self.levels.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edges graded by size, lexicographic inside each grade.
    pub fn edges(&self) -> impl Iterator<Item = &E> {
        self.levels.values().flat_map(|s| s.iter())
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for e in other.edges() {
            g.insert(e.clone());
        }
        g.universe.extend(other.universe.iter().copied());
        g
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut g: Self = self.edges().filter(|e| other.contains(e)).cloned().collect();
        g.universe = self.universe.union(&other.universe).copied().collect();
        g
    }

    /// Keeps edges of size at most `top_dim + 1`.
    pub fn skeleton(&self, top_dim: usize) -> Self {
        let mut g: Self = self.edges().filter(|e| e.len() <= top_dim + 1).cloned().collect();
        g.universe = self.universe.clone();
        g
    }

    /// Join on disjoint vertex universes: both families plus all cross edges.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(v) = self.universe.intersection(&other.universe).next() {
            return Err(Error::Overlap(v.0));
        }
        let mut g = self.union(other);
        for a in self.edges() {
            for b in other.edges() {
                g.insert(a.concat(b));
            }
        }
        Ok(g)
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        let mut g: Self = self
            .edges()
            .map(|e| E::from_valid(e.vertices().iter().map(|&v| f(v)).collect()))
            .collect();
        g.universe = self.universe.iter().map(|&v| f(v)).collect();
        g
    }

    /// Shifts every label by `offset`; the usual way to make two universes
    /// disjoint before a join.
    pub fn offset(&self, offset: u32) -> Self {
        self.relabel(|v| VertexId(v.0 + offset))
    }

    /// Smallest (directed) simplicial complex containing the family.
    pub fn delta_closure(&self) -> Self {
        let mut g = Graded::default();
        for e in self.edges() {
            for f in e.subfaces() {
                g.insert(f);
            }
        }
        g.universe = self.universe.clone();
        g
    }

    /// Largest (directed) simplicial complex contained in the family.
    pub fn lower_closure(&self) -> Self {
        let mut g: Self = Graded::default();
        for level in self.levels.values() {
            for e in level {
                if e.facets().iter().all(|f| g.contains(f)) {
                    g.insert(e.clone());
                }
            }
        }
        g.universe = self.universe.clone();
        g
    }

    pub fn is_simplicial(&self) -> bool {
        self.missing_face().is_none()
    }

    /// First edge face absent from the family, if any.
    pub fn missing_face(&self) -> Option<E> {
        self.edges().flat_map(|e| e.facets()).find(|f| !self.contains(f))
    }
}

impl Hyperdigraph {
    /// Union of the orbits of all edges; errors above the size cap.
    pub fn sym_closure(&self) -> Result<Hyperdigraph> {
        self.sym_closure_capped(DEFAULT_CAP)
    }

    pub fn sym_closure_capped(&self, cap: usize) -> Result<Hyperdigraph> {
        let mut g = Hyperdigraph::default();
        for e in self.edges() {
            if e.len() > cap {
                return Err(Error::CapExceeded { size: e.len(), cap });
            }
            for o in e.orbit() {
                g.insert(o);
            }
        }
        g.universe = self.universe.clone();
        Ok(g)
    }

    pub fn underlying(&self) -> Hypergraph {
        let mut g: Hypergraph = self.edges().map(|e| e.underlying()).collect();
        g.universe = self.universe.clone();
        g
    }

    /// Every orbit met is fully present: per underlying set, exactly `k!`
    /// orderings.
    pub fn is_sigma_invariant(&self) -> bool {
        let mut counts: BTreeMap<Hyperedge, u64> = BTreeMap::new();
        for e in self.edges() {
            *counts.entry(e.underlying()).or_default() += 1;
        }
        counts.iter().all(|(s, &c)| c == factorial(s.len()))
    }
}

impl Hypergraph {
    /// Each set with every ordering: the Σ-invariant hyperdigraph over it.
    pub fn all_orderings(&self) -> Result<Hyperdigraph> {
        let d: Hyperdigraph = self.edges().map(|e| DirectedHyperedge(e.0.clone())).collect();
        Ok(d.sym_closure()?.with_universe(self.universe.iter().copied()))
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// `{"edges": [[1,2],[3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HypergraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u32>>,
    pub edges: Vec<Vec<u32>>,
}

/// `{"dedges": [[2,1],[3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HyperdigraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u32>>,
    pub dedges: Vec<Vec<u32>>,
}

fn lists<E: Edge>(g: &Graded<E>) -> Vec<Vec<u32>> {
    g.edges().map(|e| e.vertices().iter().map(|v| v.0).collect()).collect()
}

impl Hypergraph {
    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson { vertices: None, edges: lists(self) }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Self> {
        let g = Self::from_lists(&j.edges)?;
        Ok(g.with_universe(vids(j.vertices.as_deref().unwrap_or(&[]))))
    }
}

impl Hyperdigraph {
    pub fn to_json(&self) -> HyperdigraphJson {
        HyperdigraphJson { vertices: None, dedges: lists(self) }
    }

    pub fn from_json(j: &HyperdigraphJson) -> Result<Self> {
        let g = Self::from_lists(&j.dedges)?;
        Ok(g.with_universe(vids(j.vertices.as_deref().unwrap_or(&[]))))
    }
}
