//! Vectorial matroids and directed matroids over Q and GF(p).

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyper::{DirectedHyperedge, Edge, Hyperdigraph, Hyperedge, Hypergraph, VertexId};
use crate::linalg::scalar::{format_rational, parse_rational};
use crate::linalg::{Fp, Integer, Rational, RingKind};

/// Labelled vectors in `F^dim`, with `F` either Q or GF(p).
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSet {
    field: RingKind,
    dim: usize,
    vectors: BTreeMap<VertexId, Vec<Rational>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LabelledVectorJson {
    pub label: u32,
    pub coords: Vec<String>,
}

/// `{"field":"Q","dim":2,"vectors":[{"label":1,"coords":["1","0"]}]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VectorSetJson {
    pub field: String,
    pub dim: usize,
    pub vectors: Vec<LabelledVectorJson>,
}

impl VectorSet {
    pub fn new(field: RingKind, dim: usize, vectors: Vec<(u32, Vec<Rational>)>) -> Result<Self> {
        if field == RingKind::Integers {
            return Err(Error::Invalid("vector sets live over a field (Q or F<p>)".into()));
        }
        let mut map = BTreeMap::new();
        for (label, coords) in vectors {
            if coords.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: coords.len() });
            }
            if let RingKind::Prime(p) = field {
                for c in &coords {
                    if (c.denom() % Integer::from(p)).is_zero() {
                        return Err(Error::Invalid(format!("coordinate {} has no residue mod {p}", format_rational(c))));
                    }
                }
            }
            if map.insert(VertexId(label), coords).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(VectorSet { field, dim, vectors: map })
    }

    /// Convenience constructor from small integer coordinates.
    pub fn from_ints(field: RingKind, dim: usize, vectors: &[(u32, Vec<i64>)]) -> Result<Self> {
        let v = vectors
            .iter()
            .map(|(l, c)| (*l, c.iter().map(|&x| Rational::from_integer(x.into())).collect()))
            .collect();
        Self::new(field, dim, v)
    }

    pub fn field(&self) -> RingKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vectors.keys().copied()
    }

    pub fn vector(&self, label: VertexId) -> Option<&[Rational]> {
        self.vectors.get(&label).map(|v| v.as_slice())
    }

    /// Rank of the listed vectors.
    pub fn rank_of(&self, labels: &[VertexId]) -> Result<usize> {
        let mut rows = Vec::with_capacity(labels.len());
        for l in labels {
            rows.push(self.vectors.get(l).ok_or(Error::UnknownLabel(l.0))?);
        }
        Ok(match self.field {
            RingKind::Prime(p) => rank_mod_p(&rows, p),
            _ => rank_bareiss(&rows),
        })
    }

    pub fn rank(&self) -> usize {
        let all: Vec<VertexId> = self.labels().collect();
        self.rank_of(&all).expect("own labels")
    }

    /// `(1, v)` for every vector.
    pub fn homogenized(&self) -> VectorSet {
        let vectors = self
            .vectors
            .iter()
            .map(|(l, v)| {
                let mut w = vec![Rational::one()];
                w.extend(v.iter().cloned());
                (*l, w)
            })
            .collect();
        VectorSet { field: self.field, dim: self.dim + 1, vectors }
    }

    /// `(S, 0) ⊔ (0, S')` in `F^{N+N'}`; labels must be disjoint.
    pub fn block_sum(&self, other: &VectorSet) -> Result<VectorSet> {
        if self.field != other.field {
            return Err(Error::Invalid(format!("fields differ: {} and {}", self.field, other.field)));
        }
        let dim = self.dim + other.dim;
        let mut vectors = BTreeMap::new();
        for (l, v) in &self.vectors {
            let mut w = v.clone();
            w.resize(dim, Rational::zero());
            vectors.insert(*l, w);
        }
        for (l, v) in &other.vectors {
            let mut w = vec![Rational::zero(); self.dim];
            w.extend(v.iter().cloned());
            if vectors.insert(*l, w).is_some() {
                return Err(Error::DuplicateLabel(l.0));
            }
        }
        Ok(VectorSet { field: self.field, dim, vectors })
    }

    /// The vectors carrying the given labels.
    pub fn restrict(&self, labels: &BTreeSet<VertexId>) -> Result<VectorSet> {
        let mut vectors = BTreeMap::new();
        for l in labels {
            vectors.insert(*l, self.vectors.get(l).ok_or(Error::UnknownLabel(l.0))?.clone());
        }
        Ok(VectorSet { field: self.field, dim: self.dim, vectors })
    }

    /// Total order on first coordinates: numeric for Q, residue order for
    /// GF(p).
    fn first_coordinate_key(&self, l: VertexId) -> Rational {
        let v = &self.vectors[&l];
        let Some(x) = v.first() else { return Rational::zero() };
        match self.field {
            RingKind::Prime(p) => Rational::from_integer(residue(x, p).into()),
            _ => x.clone(),
        }
    }

    pub fn to_json(&self) -> VectorSetJson {
        VectorSetJson {
            field: self.field.to_string(),
            dim: self.dim,
            vectors: self
                .vectors
                .iter()
                .map(|(l, v)| LabelledVectorJson { label: l.0, coords: v.iter().map(format_rational).collect() })
                .collect(),
        }
    }

    pub fn from_json(j: &VectorSetJson) -> Result<Self> {
        let field = RingKind::parse(&j.field).ok_or_else(|| Error::Invalid(format!("unknown field {:?}", j.field)))?;
        let mut vectors = Vec::with_capacity(j.vectors.len());
        for v in &j.vectors {
            let coords = v
                .coords
                .iter()
                .map(|c| parse_rational(c).ok_or_else(|| Error::Invalid(format!("bad coordinate {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            vectors.push((v.label, coords));
        }
        Self::new(field, j.dim, vectors)
    }
}

fn residue(x: &Rational, p: u64) -> u64 {
    let pi = Integer::from(p);
    let n = x.numer().mod_floor(&pi).to_i64().expect("residue fits");
    let d = x.denom().mod_floor(&pi).to_i64().expect("residue fits");
    let f = Fp::new(n, p) * Fp::new(d, p).inverse().expect("denominator checked at construction");
    f.value()
}

/// Fraction-free (Bareiss) elimination on denominator-cleared rows.
fn rank_bareiss(rows: &[&Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Integer>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = Integer::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = Integer::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rank_mod_p(rows: &[&Vec<Rational>], p: u64) -> usize {
    let mut m: Vec<Vec<Fp>> = rows.iter().map(|r| r.iter().map(|x| Fp::new(residue(x, p) as i64, p)).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, piv);
        let inv = m[rank][c].inverse().expect("nonzero residue");
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c] * inv;
            if f.is_zero() {
                continue;
            }
            for (x, &t) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x = *x - f * t;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// A matroid as an explicit family of independent sets, optionally backed
/// by a vector realization that answers rank queries directly.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground: BTreeSet<VertexId>,
    /// Non-empty independent sets of size at most `cap`.
    independent: Hypergraph,
    rank: usize,
    cap: usize,
    vectors: Option<VectorSet>,
}

impl Matroid {
    /// Vectorial matroid; enumerates independent sets up to `size_cap`
    /// (default: the ambient dimension).
    pub fn vectorial(s: &VectorSet, size_cap: Option<usize>) -> Matroid {
        let cap = size_cap.unwrap_or(s.dim());
        let labels: Vec<VertexId> = s.labels().collect();
        let mut independent = Hypergraph::new();
        let mut current = Vec::new();
        enumerate_independent(s, &labels, 0, cap, &mut current, &mut independent);
        Matroid {
            ground: labels.iter().copied().collect(),
            independent: independent.with_universe(labels.iter().copied()),
            rank: s.rank(),
            cap,
            vectors: Some(s.clone()),
        }
    }

    /// Independent sets are the affinely independent subsets.
    pub fn affine(s: &VectorSet, size_cap: Option<usize>) -> Matroid {
        let h = s.homogenized();
        Matroid::vectorial(&h, size_cap.or(Some(h.dim())))
    }

    /// Matroid given by its bases.
    pub fn from_bases(ground: BTreeSet<VertexId>, bases: &[BTreeSet<VertexId>]) -> Result<Matroid> {
        let rank = bases.first().map_or(0, |b| b.len());
        let mut independent = Hypergraph::new();
        for b in bases {
            if b.len() != rank {
                return Err(Error::Invalid("bases of different sizes".into()));
            }
            if let Some(x) = b.iter().find(|x| !ground.contains(x)) {
                return Err(Error::UnknownLabel(x.0));
            }
            if b.is_empty() {
                continue;
            }
            let v: Vec<VertexId> = b.iter().copied().collect();
            for f in Hyperedge::from_valid(v).subfaces() {
                independent.insert(f);
            }
        }
        Ok(Matroid { independent: independent.with_universe(ground.iter().copied()), ground, rank, cap: rank, vectors: None })
    }

    pub fn ground(&self) -> &BTreeSet<VertexId> {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size_cap(&self) -> usize {
        self.cap
    }

    pub fn vectors(&self) -> Option<&VectorSet> {
        self.vectors.as_ref()
    }

    /// Whether every independent set is enumerated.
    pub fn is_complete(&self) -> bool {
        self.cap >= self.rank
    }

    pub fn is_independent(&self, subset: &[VertexId]) -> Result<bool> {
        if let Some(x) = subset.iter().find(|x| !self.ground.contains(x)) {
            return Err(Error::UnknownLabel(x.0));
        }
        let set: BTreeSet<VertexId> = subset.iter().copied().collect();
        if set.len() != subset.len() {
            return Ok(false);
        }
        if set.is_empty() {
            return Ok(true);
        }
        if let Some(v) = &self.vectors {
            return Ok(v.rank_of(subset)? == subset.len());
        }
        Ok(self.independent.contains(&Hyperedge::from_valid(set.into_iter().collect())))
    }

    /// `M \ {∅}` as a simplicial complex on the ground set.
    pub fn complex(&self) -> &Hypergraph {
        &self.independent
    }

    pub fn count_by_size(&self) -> Vec<usize> {
        (1..=self.independent.max_len()).map(|k| self.independent.level_len(k)).collect()
    }

    pub fn bases(&self) -> Result<Vec<BTreeSet<VertexId>>> {
        if !self.is_complete() {
            return Err(Error::CapTooSmall { cap: self.cap });
        }
        if self.rank == 0 {
            return Ok(vec![BTreeSet::new()]);
        }
        Ok(self.independent.level(self.rank).map(|e| e.vertices().iter().copied().collect()).collect())
    }

    /// Dual matroid: bases are the complements of bases.
    pub fn dual(&self) -> Result<Matroid> {
        let bases: Vec<BTreeSet<VertexId>> =
            self.bases()?.iter().map(|b| self.ground.difference(b).copied().collect()).collect();
        Matroid::from_bases(self.ground.clone(), &bases)
    }

    /// Join on disjoint ground sets: independent sets are `σ ⊔ σ'`.
    pub fn join(&self, other: &Matroid) -> Result<Matroid> {
        if let Some(x) = self.ground.intersection(&other.ground).next() {
            return Err(Error::DuplicateLabel(x.0));
        }
        if !self.is_complete() {
            return Err(Error::CapTooSmall { cap: self.cap });
        }
        if !other.is_complete() {
            return Err(Error::CapTooSmall { cap: other.cap });
        }
        let ground: BTreeSet<VertexId> = self.ground.union(&other.ground).copied().collect();
        let independent = self.independent.join(&other.independent)?.with_universe(ground.iter().copied());
        let rank = self.rank + other.rank;
        Ok(Matroid { ground, independent, rank, cap: rank, vectors: None })
    }

    /// Exhaustive check of (I2): every subset of an independent set is
    /// independent. Returns a violating pair.
    pub fn heredity_violation(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        self.independent.missing_face().map(|f| {
            let owner = self.independent.edges().find(|e| e.facets().contains(&f)).expect("missing face has a coface");
            (ids(owner.vertices()), ids(f.vertices()))
        })
    }

    /// Exhaustive check of (I3) over all enumerated pairs.
    pub fn exchange_violation(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut levels: Vec<Vec<BTreeSet<VertexId>>> = vec![vec![BTreeSet::new()]];
        for k in 1..=self.independent.max_len() {
            levels.push(self.independent.level(k).map(|e| e.vertices().iter().copied().collect()).collect());
        }
        for k in 0..levels.len().saturating_sub(1) {
            for a in &levels[k] {
                for b in &levels[k + 1] {
                    let ok = b.difference(a).any(|x| {
                        let mut c = a.clone();
                        c.insert(*x);
                        levels[k + 1].contains(&c)
                    });
                    if !ok {
                        return Some((ids(&a.iter().copied().collect::<Vec<_>>()), ids(&b.iter().copied().collect::<Vec<_>>())));
                    }
                }
            }
        }
        None
    }
}

fn ids(v: &[VertexId]) -> Vec<u32> {
    v.iter().map(|x| x.0).collect()
}

fn enumerate_independent(
    s: &VectorSet,
    labels: &[VertexId],
    start: usize,
    cap: usize,
    current: &mut Vec<VertexId>,
    out: &mut Hypergraph,
) {
    if current.len() == cap {
        return;
    }
    for i in start..labels.len() {
        current.push(labels[i]);
        if s.rank_of(current).expect("own labels") == current.len() {
            out.insert(Hyperedge::from_valid(current.clone()));
            enumerate_independent(s, labels, i + 1, cap, current, out);
        }
        current.pop();
    }
}

/// How a directed matroid orders independent sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectedMode {
    /// Every ordering of every independent set.
    FullOrbit,
    /// Orderings whose first coordinates are non-decreasing.
    FirstCoordinateOrdered,
}

#[derive(Debug, Clone)]
pub struct DirectedMatroid {
    ground: BTreeSet<VertexId>,
    mode: DirectedMode,
    sequences: Hyperdigraph,
    rank: usize,
}

impl DirectedMatroid {
    pub fn vectorial(s: &VectorSet, mode: DirectedMode, size_cap: Option<usize>) -> Result<DirectedMatroid> {
        let m = Matroid::vectorial(s, size_cap);
        let mut sequences = Hyperdigraph::new();
        for e in m.complex().edges() {
            let d = DirectedHyperedge::new(e.vertices().to_vec())?;
            for o in d.orbit() {
                let keep = match mode {
                    DirectedMode::FullOrbit => true,
                    DirectedMode::FirstCoordinateOrdered => o
                        .vertices()
                        .windows(2)
                        .all(|w| s.first_coordinate_key(w[0]) <= s.first_coordinate_key(w[1])),
                };
                if keep {
                    sequences.insert(o);
                }
            }
        }
        Ok(DirectedMatroid {
            ground: m.ground.clone(),
            mode,
            sequences: sequences.with_universe(m.ground.iter().copied()),
            rank: m.rank,
        })
    }

    /// All orderings of a matroid's independent sets.
    pub fn full_orbit_of(m: &Matroid) -> Result<DirectedMatroid> {
        let sequences = m.complex().all_orderings()?;
        Ok(DirectedMatroid { ground: m.ground.clone(), mode: DirectedMode::FullOrbit, sequences, rank: m.rank })
    }

    pub fn mode(&self) -> DirectedMode {
        self.mode
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> &BTreeSet<VertexId> {
        &self.ground
    }

    /// `M⃗ \ {∅}` as a directed simplicial complex.
    pub fn complex(&self) -> &Hyperdigraph {
        &self.sequences
    }

    pub fn underlying(&self) -> Hypergraph {
        self.sequences.underlying().with_universe(self.ground.iter().copied())
    }

    pub fn is_sigma_invariant(&self) -> bool {
        self.sequences.is_sigma_invariant()
    }

    pub fn count_by_size(&self) -> Vec<usize> {
        (1..=self.sequences.max_len()).map(|k| self.sequences.level_len(k)).collect()
    }

    /// Exhaustive check of (I3)': some `x ∈ σ₂ \ σ₁` can be inserted into
    /// `σ₁` at some position to give an independent sequence.
    pub fn exchange_violation(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let level = |k: usize| -> Vec<Vec<VertexId>> {
            if k == 0 {
                vec![Vec::new()]
            } else {
                self.sequences.level(k).map(|e| e.vertices().to_vec()).collect()
            }
        };
        for k in 0..self.sequences.max_len() {
            let upper: BTreeSet<Vec<VertexId>> = level(k + 1).into_iter().collect();
            for a in level(k) {
                for b in &upper {
                    let ok = b.iter().filter(|x| !a.contains(x)).any(|x| {
                        (0..=a.len()).any(|i| {
                            let mut c = a.clone();
                            c.insert(i, *x);
                            upper.contains(&c)
                        })
                    });
                    if !ok {
                        return Some((ids(&a), ids(b)));
                    }
                }
            }
        }
        None
    }

    /// (I2)': closed under subsequences.
    pub fn heredity_violation(&self) -> Option<Vec<u32>> {
        self.sequences.missing_face().map(|f| ids(f.vertices()))
    }

    /// Join on disjoint ground sets: sequences `σ⃗ σ⃗'` by concatenation.
    pub fn join(&self, other: &DirectedMatroid) -> Result<DirectedMatroid> {
        if let Some(x) = self.ground.intersection(&other.ground).next() {
            return Err(Error::DuplicateLabel(x.0));
        }
        let ground: BTreeSet<VertexId> = self.ground.union(&other.ground).copied().collect();
        let sequences = self.sequences.join(&other.sequences)?.with_universe(ground.iter().copied());
        let mode = if self.mode == other.mode { self.mode } else { DirectedMode::FirstCoordinateOrdered };
        Ok(DirectedMatroid { ground, mode, sequences, rank: self.rank + other.rank })
    }
}
