use std::path::Path;

use reg_obstruct::graph::Graph;
use reg_obstruct::homology::embedded::{embedded_homology, homology_table};
use reg_obstruct::homology::{sigma_invariant_comparison, SimplicialChains};
use reg_obstruct::hyper::{Edge, Graded, HyperdigraphJson, HypergraphJson};
use reg_obstruct::io::{self, HomologyReport, MatroidReport, Render};
use reg_obstruct::obstruction::{
    induced_diagram_report, kunneth_obstruction_report, mv_obstruction_report, search_g_regular,
    search_k_regular_embedding, EmbeddingAssignment, SearchOptions, Verdict,
};
use reg_obstruct::{with_ring, DirectedMatroid, DirectedMode, Error, Hyperdigraph, Hypergraph, Matroid, RingKind};
use serde::Serialize;

use crate::{corpus, Command, GenKind, Outcome};

pub struct Failure {
    pub code: u8,
    pub message: String,
    pub dump: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmbeddedMismatch { .. } => 3,
            Error::NotRegular { .. } | Error::NotSigmaInvariant => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string(), dump: None }
    }
}

type Res = Result<Outcome, Failure>;

fn emit<R: Serialize + Render>(r: &R, ring: RingKind, code: u8) -> Res {
    Ok(Outcome { code, json: io::to_json(r)?, text: r.render(ring) })
}

fn homology_of<E: Edge>(h: &Graded<E>, ring: RingKind, augmented: bool, directed: bool) -> Result<HomologyReport, Error> {
    let degrees = with_ring!(ring, |T, ctx| homology_table(&SimplicialChains::<T>::new(h, augmented, ctx)?));
    Ok(HomologyReport { ring: ring.to_string(), directed, reduced: augmented, degrees })
}

fn restrict(f: &EmbeddingAssignment, g: &Graph) -> EmbeddingAssignment {
    EmbeddingAssignment { map: f.map.iter().filter(|(v, _)| g.vertex_set().contains(v)).map(|(a, b)| (*a, *b)).collect() }
}

pub fn run(cmd: &Command) -> Res {
    match cmd {
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Cycle { n } => Graph::cycle(*n)?,
                GenKind::Path { n } => Graph::path(*n)?,
                GenKind::Complete { n } => Graph::complete(*n),
                GenKind::Empty { n } => Graph::empty(*n),
                GenKind::Power { graph, l } => io::load_graph(graph)?.distance_power(*l)?,
            };
            let json = io::to_json(&g.to_json())?;
            Ok(Outcome { code: 0, text: json.clone(), json })
        }
        Command::Ind { graph, directed, skeleton, reduced, ring } => {
            let g = io::load_graph(graph)?;
            let cap = skeleton.map(|d| d + 1);
            let r = if *directed {
                homology_of(&g.directed_independence_complex(cap)?, *ring, *reduced, true)?
            } else {
                homology_of(&g.independence_complex(cap)?, *ring, *reduced, false)?
            };
            emit(&r, *ring, 0)
        }
        Command::Embedded { input, ring, sigma } => embedded(input, *ring, *sigma),
        Command::Matroid { vectors, dual, affine, directed, ordered, cap, ring } => {
            let s = io::load_vectors(vectors)?;
            let m = if *affine { Matroid::affine(&s, *cap) } else { Matroid::vectorial(&s, *cap) };
            let m = if *dual { m.dual()? } else { m };
            let (rank, counts, degrees) = if *directed {
                let dm = if *ordered {
                    if *dual || *affine {
                        return Err(Error::Invalid("--ordered applies to plain vectorial matroids".into()).into());
                    }
                    DirectedMatroid::vectorial(&s, DirectedMode::FirstCoordinateOrdered, *cap)?
                } else {
                    DirectedMatroid::full_orbit_of(&m)?
                };
                (dm.rank(), dm.count_by_size(), homology_of(dm.complex(), *ring, false, true)?.degrees)
            } else {
                (m.rank(), m.count_by_size(), homology_of(m.complex(), *ring, false, false)?.degrees)
            };
            let r = MatroidReport {
                field: s.field().to_string(),
                size: m.ground().len(),
                rank,
                directed: *directed,
                affine: *affine,
                dual: *dual,
                counts,
                degrees,
            };
            emit(&r, *ring, 0)
        }
        Command::Search { graph, vectors, k, g_regular, injective, all, budget, diagram, ring } => {
            let g = io::load_graph(graph)?;
            let s = io::load_vectors(vectors)?;
            let opts = SearchOptions { injective: *injective, all_solutions: *all, node_budget: *budget };
            let mut r = if *g_regular {
                let m = Matroid::vectorial(&s, Some(g.independence_number().max(1)));
                search_g_regular(&g, &m, opts)?
            } else {
                let k = k.expect("clap requires k");
                search_k_regular_embedding(&g, &Matroid::vectorial(&s, Some(k)), k, opts)?
            };
            if *diagram {
                if let Some(w) = &r.witness {
                    let d = with_ring!(*ring, |T, ctx| induced_diagram_report::<T>(&g, w, r.k, &s, None, ctx)?);
                    r.squares_commute = Some(d.squares_commute);
                }
            }
            let code = match r.verdict {
                Verdict::Found if r.squares_commute == Some(false) => 1,
                Verdict::Found => 0,
                Verdict::NoneExists => 1,
                Verdict::Truncated => 4,
            };
            emit(&r, *ring, code)
        }
        Command::Diagram { graph, vectors, assignment, k, sub, ring } => {
            let g = io::load_graph(graph)?;
            let s = io::load_vectors(vectors)?;
            let f = io::load_assignment(assignment)?;
            let h = sub.as_deref().map(io::load_hyperdigraph).transpose()?;
            let r = with_ring!(*ring, |T, ctx| induced_diagram_report::<T>(&g, &f, *k, &s, h.as_ref(), ctx)?);
            emit(&r, *ring, u8::from(!r.squares_commute))
        }
        Command::Mv { g1, g2, g3, vectors, assignment, k, ring } => {
            let (a, b, c) = (io::load_graph(g1)?, io::load_graph(g2)?, io::load_graph(g3)?);
            let s = io::load_vectors(vectors)?;
            let f = io::load_assignment(assignment)?;
            let (fa, fb, fc) = (restrict(&f, &a), restrict(&f, &b), restrict(&f, &c));
            let r = with_ring!(*ring, |T, ctx| mv_obstruction_report::<T>(&a, &b, &c, &fa, &fb, &fc, *k, &s, ctx)?);
            emit(&r, *ring, u8::from(!(r.exact && r.squares_commute)))
        }
        Command::Kunneth { g1, g2, v1, v2, assignment, k, k2, directed, sub1, sub2, ring } => {
            let (a, b) = (io::load_graph(g1)?, io::load_graph(g2)?);
            let (s, s2) = (io::load_vectors(v1)?, io::load_vectors(v2)?);
            let f = io::load_assignment(assignment)?;
            let (fa, fb) = (restrict(&f, &a), restrict(&f, &b));
            let subs = match (sub1, sub2) {
                (Some(x), Some(y)) => Some((io::load_hyperdigraph(x)?, io::load_hyperdigraph(y)?)),
                _ => None,
            };
            let subs_ref = subs.as_ref().map(|(x, y)| (x, y));
            let r = with_ring!(*ring, |T, ctx| kunneth_obstruction_report::<T>(
                &a,
                &b,
                &fa,
                &fb,
                (*k, *k2),
                (&s, &s2),
                subs_ref,
                *directed,
                ctx
            )?);
            let ok = r.exact && r.squares_commute && r.independence_join_identity && r.block_sum_is_join && r.product_regular;
            emit(&r, *ring, u8::from(!ok))
        }
        Command::Corpus { dir, case } => corpus::run(dir.as_deref(), case.as_deref()),
    }
}

fn embedded(input: &Path, ring: RingKind, sigma: bool) -> Res {
    let raw: serde_json::Value = io::read_json(input)?;
    let directed = raw.get("dedges").is_some();
    let dump = || serde_json::to_string(&raw).ok().map(|s| format!("input: {s}"));
    if sigma {
        if !directed {
            return Err(Error::Invalid("--sigma needs a hyperdigraph".into()).into());
        }
        let h = Hyperdigraph::from_json(&serde_json::from_value::<HyperdigraphJson>(raw.clone()).map_err(Error::from)?)?;
        let r = sigma_invariant_comparison(&h, !h.is_simplicial())?;
        return emit(&r, RingKind::Integers, 0);
    }
    let result = if directed {
        let h = Hyperdigraph::from_json(&serde_json::from_value::<HyperdigraphJson>(raw.clone()).map_err(Error::from)?)?;
        with_ring!(ring, |T, ctx| embedded_homology::<_, T>(&h, false, ctx))
    } else {
        let h = Hypergraph::from_json(&serde_json::from_value::<HypergraphJson>(raw.clone()).map_err(Error::from)?)?;
        with_ring!(ring, |T, ctx| embedded_homology::<_, T>(&h, false, ctx))
    };
    match result {
        Ok(r) => emit(&r, ring, 0),
        Err(e) => {
            let mut f = Failure::from(e);
            if f.code == 3 {
                f.dump = dump();
            }
            Err(f)
        }
    }
}
