//! k-regular and G-regular embeddings of graphs into vector sets, and the
//! homology diagrams they induce.

mod diagram;

pub use diagram::{
    induced_diagram_report, kunneth_obstruction_report, mv_obstruction_report, DiagramReport, KunnethObstructionReport,
    MvObstructionReport,
};

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hyper::{Edge, Hyperdigraph, Hypergraph, VertexId};
use crate::matroid::Matroid;

/// Vertex to ground-label map, `{"map": {"1": 4, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EmbeddingAssignment {
    pub map: BTreeMap<VertexId, VertexId>,
}

impl EmbeddingAssignment {
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        EmbeddingAssignment { map: pairs.iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect() }
    }

    pub fn get(&self, v: VertexId) -> Option<VertexId> {
        self.map.get(&v).copied()
    }

    /// Union of assignments on disjoint domains.
    pub fn merge(&self, other: &EmbeddingAssignment) -> Result<EmbeddingAssignment> {
        let mut map = self.map.clone();
        for (k, v) in &other.map {
            if map.insert(*k, *v).is_some() {
                return Err(Error::Overlap(k.0));
            }
        }
        Ok(EmbeddingAssignment { map })
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        match g.vertices().find(|v| !self.map.contains_key(v)) {
            Some(v) => Err(Error::Invalid(format!("assignment does not cover vertex {v}"))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityCheck {
    pub regular: bool,
    /// First independent set (by size, then lexicographically) whose image
    /// is dependent.
    pub witness: Option<Vec<VertexId>>,
}

fn images(f: &EmbeddingAssignment, s: &[VertexId]) -> Vec<VertexId> {
    s.iter().map(|v| f.map[v]).collect()
}

/// Every independent set of `g` with at most `k` vertices maps to an
/// independent set of `m`.
pub fn verify_k_regular(g: &Graph, f: &EmbeddingAssignment, k: usize, m: &Matroid) -> Result<RegularityCheck> {
    f.check_total(g)?;
    for e in g.independent_edges(k) {
        if !m.is_independent(&images(f, e.vertices()))? {
            return Ok(RegularityCheck { regular: false, witness: Some(e.vertices().to_vec()) });
        }
    }
    Ok(RegularityCheck { regular: true, witness: None })
}

/// Like [`verify_k_regular`] but a violation is an error.
pub fn require_k_regular(g: &Graph, f: &EmbeddingAssignment, k: usize, m: &Matroid) -> Result<()> {
    match verify_k_regular(g, f, k, m)?.witness {
        None => Ok(()),
        Some(w) => Err(Error::NotRegular { k, witness: w.iter().map(|v| v.0).collect() }),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub injective: bool,
    pub all_solutions: bool,
    /// Maximum number of tentative vertex assignments.
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Found,
    NoneExists,
    Truncated,
}

/// Search verdict with the diagram verdicts attached by the callers that
/// compute them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub k: usize,
    pub witness: Option<EmbeddingAssignment>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub solutions: Vec<EmbeddingAssignment>,
    pub nodes: u64,
    /// The whole search space was explored.
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squares_commute: Option<bool>,
}

struct Search<'a> {
    order: Vec<VertexId>,
    /// Constraints completed at each position, as lists of positions.
    checks: Vec<Vec<Vec<usize>>>,
    labels: Vec<VertexId>,
    m: &'a Matroid,
    cache: HashMap<Vec<VertexId>, bool>,
    opts: SearchOptions,
    nodes: u64,
    current: Vec<usize>,
    used: Vec<bool>,
    solutions: Vec<EmbeddingAssignment>,
    truncated: bool,
}

impl Search<'_> {
    fn consistent(&mut self, pos: usize) -> Result<bool> {
        for c in &self.checks[pos] {
            let mut img: Vec<VertexId> = c.iter().map(|&p| self.labels[self.current[p]]).collect();
            img.sort();
            if img.windows(2).any(|w| w[0] == w[1]) {
                return Ok(false);
            }
            let ok = match self.cache.get(&img) {
                Some(&b) => b,
                None => {
                    let b = self.m.is_independent(&img)?;
                    self.cache.insert(img, b);
                    b
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Returns true when the search should stop.
    fn run(&mut self, pos: usize) -> Result<bool> {
        if pos == self.order.len() {
            let map = self.order.iter().zip(&self.current).map(|(&v, &l)| (v, self.labels[l])).collect();
            self.solutions.push(EmbeddingAssignment { map });
            return Ok(!self.opts.all_solutions);
        }
        for li in 0..self.labels.len() {
            if self.opts.injective && self.used[li] {
                continue;
            }
            if self.opts.node_budget.is_some_and(|b| self.nodes >= b) {
                self.truncated = true;
                return Ok(true);
            }
            self.nodes += 1;
            self.current[pos] = li;
            if self.consistent(pos)? {
                self.used[li] = true;
                let stop = self.run(pos + 1)?;
                self.used[li] = false;
                if stop {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Vertices by descending number of incident independent sets of size at
/// most `k`, ties by vertex id.
pub fn search_order(g: &Graph, k: usize) -> Vec<VertexId> {
    let mut count: BTreeMap<VertexId, usize> = g.vertices().map(|v| (v, 0)).collect();
    for s in g.independent_sets(k) {
        for v in s {
            *count.get_mut(&v).expect("vertex of g") += 1;
        }
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|v| (std::cmp::Reverse(count[v]), *v));
    order
}

/// Complete backtracking search for a k-regular map `V(g) → ground(m)`.
/// A partial assignment is pruned as soon as some fully assigned
/// independent set of size at most `k` has a dependent image.
pub fn search_k_regular_embedding(g: &Graph, m: &Matroid, k: usize, opts: SearchOptions) -> Result<ObstructionReport> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be positive".into()));
    }
    if m.vectors().is_none() && m.size_cap() < k.min(g.independence_number()) {
        return Err(Error::CapTooSmall { cap: m.size_cap() });
    }
    let order = search_order(g, k);
    let pos: HashMap<VertexId, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut checks = vec![Vec::new(); order.len()];
    for s in g.independent_sets(k) {
        let mut ps: Vec<usize> = s.iter().map(|v| pos[v]).collect();
        ps.sort_unstable();
        checks[*ps.last().expect("non-empty")].push(ps);
    }
    let labels: Vec<VertexId> = m.ground().iter().copied().collect();
    let mut s = Search {
        checks,
        m,
        cache: HashMap::new(),
        opts,
        nodes: 0,
        current: vec![0; order.len()],
        used: vec![false; labels.len()],
        labels,
        order,
        solutions: Vec::new(),
        truncated: false,
    };
    s.run(0)?;
    let verdict = match (s.solutions.is_empty(), s.truncated) {
        (false, _) => Verdict::Found,
        (true, true) => Verdict::Truncated,
        (true, false) => Verdict::NoneExists,
    };
    Ok(ObstructionReport {
        verdict,
        k,
        witness: s.solutions.first().cloned(),
        solutions: if opts.all_solutions { s.solutions } else { Vec::new() },
        nodes: s.nodes,
        exhaustive: !s.truncated,
        exact: None,
        squares_commute: None,
    })
}

/// G-regular means k-regular for `k = α(g)`.
pub fn search_g_regular(g: &Graph, m: &Matroid, opts: SearchOptions) -> Result<ObstructionReport> {
    search_k_regular_embedding(g, m, g.independence_number().max(1), opts)
}

/// `Conf_k(G)` and `Conf_k(G)/Σ_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfLayer {
    pub ordered: Hyperdigraph,
    pub quotient: Hypergraph,
}

pub fn conf_layer(g: &Graph, k: usize) -> ConfLayer {
    ConfLayer { ordered: g.conf(k), quotient: g.conf_quotient(k) }
}
