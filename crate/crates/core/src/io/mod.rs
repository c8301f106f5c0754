//! JSON loading, canonical JSON emission and text rendering of reports.

use std::fmt::Write as _;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::homology::compare::SigmaComparison;
use crate::homology::embedded::{DegreeGroup, EmbeddedHomology};
use crate::homology::kunneth::KunnethReport;
use crate::homology::ladder::LadderReport;
use crate::hyper::{Hyperdigraph, HyperdigraphJson, Hypergraph, HypergraphJson};
use crate::linalg::{FgAbGroup, RingKind};
use crate::matroid::{VectorSet, VectorSetJson};
use crate::obstruction::{
    DiagramReport, EmbeddingAssignment, KunnethObstructionReport, MvObstructionReport, ObstructionReport, Verdict,
};

/// Runs `$body` with `$t` bound to the scalar type of `$kind` and `$ctx`
/// to a reference to its context.
#[macro_export]
macro_rules! with_ring {
    ($kind:expr, |$t:ident, $ctx:ident| $body:expr) => {
        match $kind {
            $crate::linalg::RingKind::Integers => {
                type $t = $crate::linalg::Integer;
                let $ctx = &();
                $body
            }
            $crate::linalg::RingKind::Rationals => {
                type $t = $crate::linalg::Rational;
                let $ctx = &();
                $body
            }
            $crate::linalg::RingKind::Prime(p) => {
                type $t = $crate::linalg::Fp;
                let $ctx = &p;
                $body
            }
        }
    };
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read_json::<GraphJson>(path)?)
}

pub fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    Hypergraph::from_json(&read_json::<HypergraphJson>(path)?)
}

pub fn load_hyperdigraph(path: &Path) -> Result<Hyperdigraph> {
    Hyperdigraph::from_json(&read_json::<HyperdigraphJson>(path)?)
}

pub fn load_vectors(path: &Path) -> Result<VectorSet> {
    VectorSet::from_json(&read_json::<VectorSetJson>(path)?)
}

pub fn load_assignment(path: &Path) -> Result<EmbeddingAssignment> {
    read_json(path)
}

/// Pretty JSON with a trailing newline. Field order follows the struct
/// definitions and maps are ordered, so equal inputs give equal bytes.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Degreewise homology of one complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomologyReport {
    pub ring: String,
    pub directed: bool,
    pub reduced: bool,
    pub degrees: Vec<DegreeGroup>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatroidReport {
    pub field: String,
    pub size: usize,
    pub rank: usize,
    pub directed: bool,
    pub affine: bool,
    pub dual: bool,
    /// Number of independent sets (or sequences) of each size from 1.
    pub counts: Vec<usize>,
    pub degrees: Vec<DegreeGroup>,
}

/// `Z^r ⊕ Z/d` over Z; over a field only the dimension is meaningful.
pub fn group_text(g: &FgAbGroup, ring: RingKind) -> String {
    match ring {
        RingKind::Integers => g.to_string(),
        k => match g.rank {
            0 => "0".into(),
            1 => k.to_string(),
            r => format!("{k}^{r}"),
        },
    }
}

fn degree_lines(out: &mut String, degrees: &[DegreeGroup], ring: RingKind) {
    for d in degrees {
        let _ = writeln!(out, "  H_{:<3} {}", d.n, group_text(&d.group, ring));
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable rendering.
pub trait Render {
    fn render(&self, ring: RingKind) -> String;
}

impl Render for HomologyReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = format!(
            "{}homology over {}{}\n",
            if self.reduced { "reduced " } else { "" },
            self.ring,
            if self.directed { " (directed)" } else { "" }
        );
        degree_lines(&mut s, &self.degrees, ring);
        s
    }
}

impl Render for EmbeddedHomology {
    fn render(&self, ring: RingKind) -> String {
        let mut s = String::from("embedded homology\n");
        degree_lines(&mut s, &self.degrees, ring);
        let _ = writeln!(s, "Inf and Sup agree: {}", yes(self.quasi_isomorphic));
        s
    }
}

impl Render for MatroidReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = format!("matroid over {}: {} elements, rank {}\n", self.field, self.size, self.rank);
        for (i, c) in self.counts.iter().enumerate() {
            let _ = writeln!(s, "  size {}: {c}", i + 1);
        }
        s.push_str("homology of the complex\n");
        degree_lines(&mut s, &self.degrees, ring);
        s
    }
}

impl Render for LadderReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(s, "row {} (exact: {})", r.name, yes(r.exact));
            for n in &r.nodes {
                let mark = if n.exact { "" } else { "  NOT EXACT" };
                let _ = writeln!(s, "  {:<12} {}{mark}", n.label, group_text(&n.group, ring));
            }
        }
        let bad: Vec<String> = self.squares.iter().filter(|q| !q.commutes).map(|q| format!("{}@{}", q.from, q.n)).collect();
        let _ = writeln!(s, "squares: {} checked, {} fail {}", self.squares.len(), bad.len(), bad.join(" "));
        let _ = writeln!(s, "exact: {}  squares commute: {}", yes(self.exact), yes(self.squares_commute));
        s
    }
}

impl Render for KunnethReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let _ = writeln!(s, "row {i}");
            for d in row {
                let _ = writeln!(
                    s,
                    "  H~_{:<3} join {:<14} tensor {:<14} tor {:<10} cross injective: {}  coker = Tor: {}",
                    d.n,
                    group_text(&d.join, ring),
                    group_text(&d.tensor, ring),
                    group_text(&d.tor, ring),
                    yes(d.cross_injective),
                    yes(d.cokernel_is_tor)
                );
            }
        }
        let _ = writeln!(s, "exact: {}  squares commute: {}", yes(self.exact), yes(self.squares_commute));
        s
    }
}

impl Render for ObstructionReport {
    fn render(&self, _: RingKind) -> String {
        let verdict = match self.verdict {
            Verdict::Found => "embedding found",
            Verdict::NoneExists => "no embedding exists",
            Verdict::Truncated => "search truncated",
        };
        let mut s = format!("k = {}: {verdict} ({} nodes, exhaustive: {})\n", self.k, self.nodes, yes(self.exhaustive));
        if let Some(w) = &self.witness {
            let pairs: Vec<String> = w.map.iter().map(|(v, l)| format!("{}->{}", v.0, l.0)).collect();
            let _ = writeln!(s, "witness: {}", pairs.join(" "));
        }
        if !self.solutions.is_empty() {
            let _ = writeln!(s, "solutions: {}", self.solutions.len());
        }
        if let Some(c) = self.squares_commute {
            let _ = writeln!(s, "projection square commutes: {}", yes(c));
        }
        s
    }
}

impl Render for DiagramReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = format!("projection square, k = {}{}\n", self.k, if self.embedded { " (embedded)" } else { "" });
        for c in &self.corners {
            let _ = writeln!(s, "{}", c.name);
            degree_lines(&mut s, &c.degrees, ring);
        }
        let _ = writeln!(s, "squares commute: {}", yes(self.squares_commute));
        s
    }
}

impl Render for MvObstructionReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = String::new();
        for (name, l) in [
            ("independence complexes, projection", &self.independence_projection),
            ("matroids, projection", &self.matroid_projection),
            ("f_* undirected", &self.map_undirected),
            ("f_* directed", &self.map_directed),
        ] {
            let _ = writeln!(s, "== {name}");
            s.push_str(&l.render(ring));
        }
        let e = &self.embedded_layers;
        let _ = writeln!(
            s,
            "== Conf_k layers: hypotheses (I) {} (II) {}{}",
            yes(e.sigma_invariant),
            yes(e.intersections_shared),
            if e.precondition_met { "" } else { ", precondition unmet" }
        );
        if let Some(l) = &e.ladder {
            s.push_str(&l.render(ring));
        }
        if let Some(err) = &e.construction_error {
            let _ = writeln!(s, "construction failed: {err}");
        }
        let _ = writeln!(s, "overall exact: {}  squares commute: {}", yes(self.exact), yes(self.squares_commute));
        s
    }
}

impl Render for KunnethObstructionReport {
    fn render(&self, ring: RingKind) -> String {
        let mut s = format!(
            "Ind join identity: {}  block sum = join: {}  (f,f') regular: {}\n",
            yes(self.independence_join_identity),
            yes(self.block_sum_is_join),
            yes(self.product_regular)
        );
        let parts = [
            ("f_* undirected", Some(&self.map_undirected)),
            ("f_* directed", self.map_directed.as_ref()),
            ("independence complexes, projection", self.independence_projection.as_ref()),
            ("matroids, projection", self.matroid_projection.as_ref()),
        ];
        for (name, r) in parts {
            if let Some(r) = r {
                let _ = writeln!(s, "== {name}");
                s.push_str(&r.render(ring));
            }
        }
        let _ = writeln!(s, "overall exact: {}  squares commute: {}", yes(self.exact), yes(self.squares_commute));
        s
    }
}

impl Render for SigmaComparison {
    fn render(&self, ring: RingKind) -> String {
        let mut s = String::from("k  rank C(dir)  k!*rank C  H(dir)  H(und)^k!\n");
        for l in &self.levels {
            let f = crate::hyper::factorial(l.k) as usize;
            let _ = writeln!(
                s,
                "{:<2} {:<11} {:<10} {:<7} {}{}",
                l.k,
                l.directed_rank,
                f * l.underlying_rank,
                group_text(&l.directed_homology, ring),
                group_text(&l.underlying_power, ring),
                if l.homology_agrees { "" } else { "  MISMATCH" }
            );
        }
        let _ = writeln!(s, "chain identity: {}  homology: {}", yes(self.chain_identity), self.homology_verdict);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Integer;

    #[test]
    fn group_rendering() {
        let g = FgAbGroup::from_cyclic(2, vec![Integer::from(2)]);
        assert_eq!(group_text(&g, RingKind::Integers), "Z^2 ⊕ Z/2");
        assert_eq!(group_text(&FgAbGroup::free(3), RingKind::Prime(2)), "F2^3");
        assert_eq!(group_text(&FgAbGroup::zero(), RingKind::Rationals), "0");
    }

    #[test]
    fn homology_report_json_shape() {
        let r = HomologyReport {
            ring: "Z".into(),
            directed: false,
            reduced: false,
            degrees: vec![DegreeGroup { n: 0, group: FgAbGroup::free(1) }],
        };
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(j, r#"{"ring":"Z","directed":false,"reduced":false,"degrees":[{"n":0,"rank":1,"torsion":[]}]}"#);
    }

    #[test]
    fn ring_dispatch() {
        let k = crate::graph::Graph::cycle(5).unwrap().independence_complex(None).unwrap();
        for ring in [RingKind::Integers, RingKind::Rationals, RingKind::Prime(3)] {
            let h = with_ring!(ring, |T, ctx| crate::homology::SimplicialChains::<T>::new(&k, false, ctx)
                .unwrap()
                .complex
                .homology());
            assert_eq!(h[1].1.rank, 1);
        }
    }
}
