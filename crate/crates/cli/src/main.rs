//! `reg-obstruct`: independence complexes, embedded homology, vectorial
//! matroids and k-regular embedding obstructions from the command line.
//!
//! Exit codes: 0 found or verified, 1 none exists or verified negative,
//! 2 malformed input, 3 embedded homology mismatch, 4 search truncated.

mod commands;
mod corpus;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reg_obstruct::RingKind;

#[derive(Parser, Debug)]
#[command(name = "reg-obstruct", version, about = "Homological obstructions to k-regular embeddings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the JSON report instead of the text table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

fn parse_ring(s: &str) -> Result<RingKind, String> {
    RingKind::parse(s).ok_or_else(|| format!("unknown ring {s:?}; use Z, Q or F<p> with p prime"))
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    Cycle { n: u32 },
    Path { n: u32 },
    Complete { n: u32 },
    /// n isolated vertices
    Empty { n: u32 },
    /// Distance power of a graph file.
    Power { graph: PathBuf, l: u32 },
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graph as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Homology of the (directed) independence complex of a graph.
    Ind {
        graph: PathBuf,
        #[arg(long)]
        directed: bool,
        /// Keep simplices of dimension at most this.
        #[arg(long)]
        skeleton: Option<usize>,
        /// Reduced homology (augmented chains).
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Embedded homology of a hypergraph ({"edges"}) or hyperdigraph ({"dedges"}).
    Embedded {
        input: PathBuf,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
        /// Compare a Σ-invariant hyperdigraph with its underlying hypergraph (over Z).
        #[arg(long)]
        sigma: bool,
    },
    /// Rank, independent-set counts and complex homology of a vector set.
    Matroid {
        vectors: PathBuf,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        affine: bool,
        #[arg(long)]
        directed: bool,
        /// Directed sequences with non-decreasing first coordinates.
        #[arg(long, requires = "directed")]
        ordered: bool,
        /// Enumerate independent sets up to this size.
        #[arg(long, value_parser = positive)]
        cap: Option<usize>,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Decide whether a k-regular (or G-regular) map into the vectors exists.
    Search {
        graph: PathBuf,
        vectors: PathBuf,
        #[arg(short, long, value_parser = positive, required_unless_present = "g_regular")]
        k: Option<usize>,
        /// Use k = independence number.
        #[arg(long)]
        g_regular: bool,
        #[arg(long)]
        injective: bool,
        /// Enumerate every solution.
        #[arg(long)]
        all: bool,
        /// Stop after this many tentative assignments.
        #[arg(long)]
        budget: Option<u64>,
        /// Verify the projection square for the witness.
        #[arg(long)]
        diagram: bool,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Projection square induced by a k-regular assignment.
    Diagram {
        graph: PathBuf,
        vectors: PathBuf,
        assignment: PathBuf,
        #[arg(short, long, value_parser = positive)]
        k: usize,
        /// Sub-hyperdigraph of the directed skeleton ({"dedges"}).
        #[arg(long)]
        sub: Option<PathBuf>,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Mayer-Vietoris ladders for L' = G' *~ G''' and L'' = G'' *~ G'''.
    Mv {
        g1: PathBuf,
        g2: PathBuf,
        g3: PathBuf,
        vectors: PathBuf,
        /// One assignment covering all three vertex sets.
        assignment: PathBuf,
        #[arg(short, long, value_parser = positive)]
        k: usize,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Künneth ladders for the block map of two regular maps.
    Kunneth {
        g1: PathBuf,
        g2: PathBuf,
        v1: PathBuf,
        v2: PathBuf,
        /// One assignment covering both vertex sets.
        assignment: PathBuf,
        #[arg(short, long, value_parser = positive)]
        k: usize,
        #[arg(long, value_parser = positive)]
        k2: usize,
        /// Add the directed and projection ladders.
        #[arg(long)]
        directed: bool,
        #[arg(long, requires = "sub2")]
        sub1: Option<PathBuf>,
        #[arg(long, requires = "sub1")]
        sub2: Option<PathBuf>,
        #[arg(long, default_value = "Z", value_parser = parse_ring)]
        ring: RingKind,
    },
    /// Run the regression corpus.
    Corpus {
        /// Corpus directory (default: the bundled corpus).
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Only run cases whose name contains this.
        #[arg(long)]
        case: Option<String>,
    },
}

/// Result of one command: exit code plus both renderings.
pub struct Outcome {
    pub code: u8,
    pub json: String,
    pub text: String,
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("REG_OBSTRUCT_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("REG_OBSTRUCT_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("REG_OBSTRUCT_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli.command) {
        Ok(out) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &out.json) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            print!("{}", if cli.json { &out.json } else { &out.text });
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(d) = &f.dump {
                eprintln!("{d}");
            }
            ExitCode::from(f.code)
        }
    }
}
