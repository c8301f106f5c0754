//! Graphs, geodesic distance, distance powers and independence complexes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyper::{factorial, DirectedHyperedge, Edge, Hyperdigraph, Hyperedge, Hypergraph, VertexId};

/// Largest vertex count for which the independence number is the default
/// enumeration bound.
pub const DEFAULT_ALPHA_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

/// Geodesic distance; disconnected pairs are at `Infinite` distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u32(*d),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

impl Graph {
    pub fn new(vertices: impl IntoIterator<Item = u32>, edges: &[(u32, u32)]) -> Result<Graph> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().map(VertexId).collect();
        let mut g = Graph { vertices, edges: BTreeSet::new() };
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b))?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        for v in [a, b] {
            if !self.vertices.contains(&v) {
                return Err(Error::UnknownVertex(v.0));
            }
        }
        if a == b {
            return Err(Error::Invalid(format!("loop at vertex {}", a.0)));
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    /// Vertices 1..=n with edges i ~ i+1 and n ~ 1.
    pub fn cycle(n: u32) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<(u32, u32)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::new(1..=n, &edges)
    }

    /// Vertices 1..=n with edges i ~ i+1.
    pub fn path(n: u32) -> Result<Graph> {
        if n < 1 {
            return Err(Error::OutOfRange("path needs n >= 1".into()));
        }
        let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(1..=n, &edges)
    }

    pub fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j));
            }
        }
        Graph::new(1..=n, &edges).expect("valid complete graph")
    }

    /// n isolated vertices labelled 1..=n.
    pub fn empty(n: u32) -> Graph {
        Graph::new(1..=n, &[]).expect("valid empty graph")
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied().filter(move |&u| self.adjacent(u, v))
    }

    pub fn geodesic_distance(&self, u: VertexId, v: VertexId) -> Result<Distance> {
        for x in [u, v] {
            if !self.vertices.contains(&x) {
                return Err(Error::UnknownVertex(x.0));
            }
        }
        Ok(self.bfs(u).into_iter().find(|(w, _)| *w == v).map_or(Distance::Infinite, |(_, d)| Distance::Finite(d)))
    }

    fn bfs(&self, s: VertexId) -> Vec<(VertexId, u32)> {
        let mut seen = BTreeSet::from([s]);
        let mut out = vec![(s, 0)];
        let mut q = VecDeque::from([(s, 0u32)]);
        while let Some((x, d)) = q.pop_front() {
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    out.push((y, d + 1));
                    q.push_back((y, d + 1));
                }
            }
        }
        out
    }

    /// Same vertices; `u ~ v` iff `0 < d(u, v) <= l`.
    pub fn distance_power(&self, l: u32) -> Result<Graph> {
        if l == 0 {
            return Err(Error::OutOfRange("distance power needs l >= 1".into()));
        }
        let mut g = Graph { vertices: self.vertices.clone(), edges: BTreeSet::new() };
        for u in self.vertices() {
            for (v, d) in self.bfs(u) {
                if d > 0 && d <= l {
                    g.edges.insert((u.min(v), u.max(v)));
                }
            }
        }
        Ok(g)
    }

    /// Union plus every edge between the two vertex sets.
    pub fn reduced_join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for &a in &self.vertices {
            for &b in &other.vertices {
                g.edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        if let Some(v) = self.vertices.intersection(&other.vertices).next() {
            return Err(Error::Overlap(v.0));
        }
        Ok(Graph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        })
    }

    pub fn offset(&self, k: u32) -> Graph {
        Graph {
            vertices: self.vertices.iter().map(|v| VertexId(v.0 + k)).collect(),
            edges: self.edges.iter().map(|(a, b)| (VertexId(a.0 + k), VertexId(b.0 + k))).collect(),
        }
    }

    /// Non-empty independent sets up to `max_card`, each increasing, in
    /// depth-first order over vertices in numeric order.
    pub fn independent_sets(&self, max_card: usize) -> Vec<Vec<VertexId>> {
        let vs: Vec<VertexId> = self.vertices().collect();
        let n = vs.len();
        let words = n.div_ceil(64).max(1);
        // adjacency masks restricted to later vertices
        let mut adj = vec![vec![0u64; words]; n];
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                if i != j && self.adjacent(a, b) {
                    adj[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut blocked = vec![0u64; words];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            start: usize,
            n: usize,
            max_card: usize,
            vs: &[VertexId],
            adj: &[Vec<u64>],
            blocked: &mut Vec<u64>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<VertexId>>,
        ) {
            if cur.len() == max_card {
                return;
            }
            for i in start..n {
                if blocked[i / 64] >> (i % 64) & 1 == 1 {
                    continue;
                }
                cur.push(i);
                out.push(cur.iter().map(|&k| vs[k]).collect());
                let saved = blocked.clone();
                for (b, a) in blocked.iter_mut().zip(&adj[i]) {
                    *b |= a;
                }
                rec(i + 1, n, max_card, vs, adj, blocked, cur, out);
                *blocked = saved;
                cur.pop();
            }
        }
        rec(0, n, max_card, &vs, &adj, &mut blocked, &mut cur, &mut out);
        out
    }

    pub fn independence_number(&self) -> usize {
        self.independent_sets(usize::MAX).iter().map(|s| s.len()).max().unwrap_or(0)
    }

    fn resolve_cap(&self, max_card: Option<usize>) -> Result<usize> {
        match max_card {
            Some(0) => Err(Error::OutOfRange("max_card must be positive".into())),
            Some(k) => Ok(k),
            None if self.num_vertices() <= DEFAULT_ALPHA_LIMIT => Ok(self.num_vertices().max(1)),
            None => Err(Error::OutOfRange(format!(
                "graphs with more than {DEFAULT_ALPHA_LIMIT} vertices need an explicit max_card"
            ))),
        }
    }

    /// All independent sets of size at most `max_card` (default: all).
    pub fn independence_complex(&self, max_card: Option<usize>) -> Result<Hypergraph> {
        let cap = self.resolve_cap(max_card)?;
        let h: Hypergraph = self
            .independent_sets(cap)
            .into_iter()
            .map(|s| Hyperedge::new(s).expect("independent sets have distinct vertices"))
            .collect();
        Ok(h.with_universe(self.vertices()))
    }

    /// Ordered independent tuples; level k is `Conf_k(G)`.
    pub fn directed_independence_complex(&self, max_card: Option<usize>) -> Result<Hyperdigraph> {
        Ok(self.independence_complex(max_card)?.all_orderings()?.with_universe(self.vertices()))
    }

    /// `Conf_k(G)`: ordered k-tuples of mutually non-adjacent vertices.
    pub fn conf(&self, k: usize) -> Hyperdigraph {
        let h: Hyperdigraph = self
            .independent_sets(k)
            .into_iter()
            .filter(|s| s.len() == k)
            .flat_map(|s| DirectedHyperedge::new(s).expect("distinct").orbit())
            .collect();
        h.with_universe(self.vertices())
    }

    /// `Conf_k(G)/Σ_k`.
    pub fn conf_quotient(&self, k: usize) -> Hypergraph {
        self.conf(k).underlying()
    }

    /// Number of ordered tuples in `Conf_k` (for reports).
    pub fn conf_count(&self, k: usize) -> u64 {
        self.conf_quotient(k).len() as u64 * factorial(k)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices().map(|v| v.0).collect(),
            edges: self.edges().map(|(a, b)| [a.0, b.0]).collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        let edges: Vec<(u32, u32)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let vs: BTreeSet<u32> = j.vertices.iter().copied().collect();
        if vs.len() != j.vertices.len() {
            return Err(Error::Invalid("duplicate vertex in graph".into()));
        }
        Graph::new(vs, &edges)
    }

    /// Independent sets of size at most k, as hyperedges (canonical order).
    pub fn independent_edges(&self, k: usize) -> Vec<Hyperedge> {
        let mut v: Vec<Hyperedge> = self
            .independent_sets(k)
            .into_iter()
            .map(|s| Hyperedge::new(s).expect("distinct"))
            .collect();
        v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        v
    }
}

/// `{"vertices":[1,2,...], "edges":[[1,2],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub vertices: Vec<u32>,
    pub edges: Vec<[u32; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::vids;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    #[test]
    fn distances() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.geodesic_distance(v(1), v(3)).unwrap(), Distance::Finite(2));
        assert_eq!(c5.geodesic_distance(v(2), v(2)).unwrap(), Distance::Finite(0));
        let two = Graph::path(2).unwrap().disjoint_union(&Graph::path(2).unwrap().offset(2)).unwrap();
        assert_eq!(two.geodesic_distance(v(1), v(3)).unwrap(), Distance::Infinite);
        assert_eq!(serde_json::to_string(&Distance::Infinite).unwrap(), "\"inf\"");
        assert!(c5.geodesic_distance(v(1), v(9)).is_err());
    }

    #[test]
    fn powers() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.distance_power(1).unwrap(), c5);
        let c6 = Graph::cycle(6).unwrap().distance_power(2).unwrap();
        let nbrs: Vec<u32> = c6.neighbors(v(1)).map(|x| x.0).collect();
        assert_eq!(nbrs, vec![2, 3, 5, 6]);
        assert_eq!(Graph::path(4).unwrap().distance_power(3).unwrap(), Graph::complete(4));
    }

    #[test]
    fn independence_complexes_of_small_graphs() {
        let ind = Graph::cycle(5).unwrap().independence_complex(None).unwrap();
        let edges: Vec<Vec<VertexId>> = ind.level(2).map(|e| e.vertices().to_vec()).collect();
        let expected: Vec<Vec<VertexId>> =
            [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]].iter().map(|e| vids(e)).collect();
        assert_eq!(edges, expected);
        assert_eq!(ind.max_len(), 2);
        let p4 = Graph::path(4).unwrap().independence_complex(None).unwrap();
        let e: Vec<Vec<VertexId>> = p4.level(2).map(|e| e.vertices().to_vec()).collect();
        assert_eq!(e, vec![vids(&[1, 3]), vids(&[1, 4]), vids(&[2, 4])]);
        let k4 = Graph::complete(4).independence_complex(None).unwrap();
        assert_eq!((k4.len(), k4.max_len()), (4, 1));
        assert!(ind.is_simplicial());
    }

    #[test]
    fn directed_complexes() {
        let c5 = Graph::cycle(5).unwrap();
        let d = c5.directed_independence_complex(None).unwrap();
        assert_eq!(d.level_len(2), 10);
        assert_eq!(d.level_len(1), 5);
        assert_eq!(d.underlying(), c5.independence_complex(None).unwrap());
        assert!(d.is_sigma_invariant() && d.is_simplicial());
        let k3 = Graph::complete(3).directed_independence_complex(None).unwrap();
        assert_eq!((k3.len(), k3.max_len()), (3, 1));
        assert_eq!(c5.conf(2).len(), 10);
        assert_eq!(c5.conf(1).len(), 5);
        assert!(c5.conf(3).is_empty());
    }

    #[test]
    fn skeleta_and_joins() {
        let ind = Graph::cycle(4).unwrap().independence_complex(None).unwrap();
        assert_eq!(ind.skeleton(1), ind);
        assert_eq!(ind.skeleton(0).len(), 4);
        let k2 = Graph::empty(1).reduced_join(&Graph::empty(1).offset(1)).unwrap();
        assert_eq!(k2, Graph::complete(2));
        let cone = Graph::cycle(4).unwrap().reduced_join(&Graph::empty(1).offset(4)).unwrap();
        assert_eq!((cone.num_vertices(), cone.num_edges()), (5, 8));
        assert!(Graph::cycle(4).unwrap().disjoint_union(&Graph::path(1).unwrap()).is_err());
    }

    #[test]
    fn disjoint_union_gives_join_of_complexes() {
        let a = Graph::path(2).unwrap();
        let b = a.offset(2);
        let u = a.disjoint_union(&b).unwrap();
        let lhs = u.independence_complex(None).unwrap();
        let rhs = a.independence_complex(None).unwrap().join(&b.independence_complex(None).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!((lhs.level_len(1), lhs.level_len(2)), (4, 4));
    }

    #[test]
    fn generators_validate() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3));
        assert_eq!(Graph::path(2).unwrap().num_edges(), 1);
        assert_eq!(Graph::cycle(5).unwrap().num_edges(), 5);
    }
}
