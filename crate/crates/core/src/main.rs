//! Command-line front end.
//!
//! Exit codes: 0 accepted / valid, 1 rejected / invalid, 2 input error,
//! 3 disagreement with the exhaustive oracle.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use outerfan::oracle::{Oracle, DEFAULT_MAX_N};
use outerfan::recognizer::{recognize, recognize_3connected};
use outerfan::reduction::{
    gen_instance, partition_from_values, route_witness, validate_witness, ReductionInstance,
    ThreePartitionInstance, WitnessDrawing,
};
use outerfan::svg::render_svg;
use outerfan::sweep::{random_biconnected_set, sweep};
use outerfan::{edge, Edge, Error, Graph};

const EXIT_REJECT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "outerfan",
    version,
    about = "Maximal outer-fan-planar graphs and fan-planarity reduction instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide maximal outer-fan-planarity of an edge-list graph.
    Recognize {
        file: PathBuf,
        /// Cross-check the verdict with the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
        /// Size cap for the oracle cross-check.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Write the first drawing as SVG.
        #[arg(long, value_name = "OUT")]
        svg: Option<PathBuf>,
        /// Include all drawings (up to symmetry) in the report.
        #[arg(long)]
        emit_embeddings: bool,
        /// Edges that must be outer, as `u-v,u-v`; requires a 3-connected graph.
        #[arg(long, value_name = "LIST")]
        outer_edges: Option<String>,
    },
    /// Exhaustive search over all circular orders.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Generate a reduction instance from a 3-Partition input.
    #[command(name = "gen-3p")]
    Gen3p {
        #[arg(long)]
        m: usize,
        #[arg(long = "B", value_name = "B")]
        b: u64,
        /// Comma-separated multiset A.
        #[arg(long = "A", value_name = "LIST")]
        a: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Route the transversal paths for a 3-Partition solution.
    RouteWitness {
        #[arg(long)]
        instance: PathBuf,
        /// Triples separated by `;`, e.g. `7,7,10;7,8,9;8,8,8`.
        #[arg(long)]
        partition: String,
        /// Read the triples as indices into A instead of values.
        #[arg(long)]
        indices: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Validate a witness drawing against an instance.
    VerifyWitness {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Compare the recognizer with the oracle on seeded random graphs.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure that ends the command with the given exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(EXIT_INPUT, e.to_string())
    }
}

type Outcome = Result<u8, Fail>;

fn input(msg: impl Into<String>) -> Fail {
    Fail(EXIT_INPUT, msg.into())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Fail> {
    serde_json::from_str(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Fail> {
    match out {
        Some(p) => write(
            p,
            &serde_json::to_string_pretty(value).expect("serializable"),
        ),
        None => {
            print_json(value);
            Ok(())
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Fail> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| input(format!("bad {what} entry {s:?}")))
        })
        .collect()
}

fn parse_outer_edges(text: &str) -> Result<Vec<Edge>, Fail> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (a, b) = s
                .trim()
                .split_once('-')
                .ok_or_else(|| input(format!("bad edge {s:?}, expected u-v")))?;
            let (a, b) = (a.parse(), b.parse());
            match (a, b) {
                (Ok(a), Ok(b)) => Ok(edge(a, b)),
                _ => Err(input(format!("bad edge {s:?}, expected u-v"))),
            }
        })
        .collect()
}

fn cmd_recognize(
    file: &Path,
    oracle: bool,
    max_n: usize,
    svg: Option<&Path>,
    emit_embeddings: bool,
    outer_edges: Option<&str>,
) -> Outcome {
    let g = Graph::parse_edge_list(&read(file)?)?;
    let out = match outer_edges {
        Some(list) => recognize_3connected(&g, &parse_outer_edges(list)?)?,
        None => recognize(&g),
    };
    let mut report = json!({
        "n": g.n(),
        "m": g.m(),
        "verdict": out.verdict,
        "route": out.route,
        "embedding_count": out.embeddings.len(),
        "max_live_candidates": out.max_live_candidates,
    });
    if emit_embeddings {
        report["embeddings"] = json!(out.embeddings);
    }
    let mut code = if out.is_accepted() { 0 } else { EXIT_REJECT };
    if oracle {
        let maximal = Oracle::with_max_n(max_n).maximal_outer_fan_planar(&g)?;
        let agrees = maximal == out.is_accepted();
        report["oracle"] = json!({ "maximal": maximal, "agrees": agrees });
        if !agrees {
            code = EXIT_DISAGREE;
        }
    }
    if let Some(path) = svg {
        match out.embeddings.first() {
            Some(ord) => write(path, &render_svg(&g, ord))?,
            None => eprintln!("no drawing to render: graph rejected"),
        }
    }
    print_json(&report);
    Ok(code)
}

fn cmd_oracle(file: &Path, max_n: usize) -> Outcome {
    let g = Graph::parse_edge_list(&read(file)?)?;
    let oracle = Oracle::with_max_n(max_n);
    let embeddings = oracle.enumerate_embeddings(&g)?;
    let maximal = oracle.maximal_outer_fan_planar(&g)?;
    print_json(&json!({
        "outer_fan_planar": !embeddings.is_empty(),
        "maximal": maximal,
        "embeddings": embeddings,
    }));
    Ok(0)
}

fn cmd_gen(m: usize, b: u64, a: &str, out: Option<&Path>) -> Outcome {
    let tp = ThreePartitionInstance::new(m, parse_list(a, "A")?, b)?;
    let inst = gen_instance(&tp)?;
    emit_json(&inst, out)?;
    if out.is_some() {
        print_json(&json!({
            "n": inst.n,
            "edges": inst.edges.len(),
            "K": inst.params.k,
            "top_beam": tp.beam_length(),
            "path_length": tp.path_length(),
        }));
    }
    Ok(0)
}

fn cmd_route(instance: &Path, partition: &str, indices: bool, out: Option<&Path>) -> Outcome {
    let inst: ReductionInstance = read_json(instance)?;
    let tp = inst.three_partition();
    let triples: Vec<&str> = partition
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .collect();
    let index_triples = if indices {
        triples
            .iter()
            .map(|t| {
                let v: Vec<usize> = parse_list(t, "partition")?;
                <[usize; 3]>::try_from(v)
                    .map_err(|_| input(format!("triple {t:?} does not have three entries")))
            })
            .collect::<Result<Vec<_>, Fail>>()?
    } else {
        let values = triples
            .iter()
            .map(|t| {
                let v: Vec<u64> = parse_list(t, "partition")?;
                <[u64; 3]>::try_from(v)
                    .map_err(|_| input(format!("triple {t:?} does not have three entries")))
            })
            .collect::<Result<Vec<_>, Fail>>()?;
        partition_from_values(&tp, &values)?
    };
    let w = route_witness(&inst, &index_triples)?;
    emit_json(&w, out)?;
    Ok(0)
}

fn cmd_verify(instance: &Path, witness: &Path) -> Outcome {
    let inst: ReductionInstance = read_json(instance)?;
    let w: WitnessDrawing = read_json(witness)?;
    let report = validate_witness(&inst, &w)?;
    print_json(&report);
    Ok(if report.valid { 0 } else { EXIT_REJECT })
}

fn cmd_sweep(n: usize, count: usize, seed: u64) -> Outcome {
    if !(3..=DEFAULT_MAX_N).contains(&n) {
        return Err(input(format!("n = {n} is outside 3..={DEFAULT_MAX_N}")));
    }
    let graphs = random_biconnected_set(n, count, seed);
    let r = sweep(&graphs);
    print_json(&json!({
        "n": n,
        "seed": seed,
        "graphs": r.graphs,
        "accepted": r.accepted,
        "accepted_3connected": r.accepted_3connected,
        "oracle_outer_fan_planar": r.oracle_outer_fan_planar,
        "disagreements": r.disagreements.len(),
        "embedding_mismatches": r.embedding_mismatches.len(),
        "edge_count_violations": r.edge_count_violations.len(),
        "density_violations": r.density_violations.len(),
        "audit_violations": r.audit_violations.len(),
        "spqr_failures": r.spqr_failures.len(),
        "max_live_candidates": r.max_live_candidates,
    }));
    Ok(if r.is_clean() { 0 } else { EXIT_DISAGREE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Recognize {
            file,
            oracle,
            max_n,
            svg,
            emit_embeddings,
            outer_edges,
        } => cmd_recognize(
            file,
            *oracle,
            *max_n,
            svg.as_deref(),
            *emit_embeddings,
            outer_edges.as_deref(),
        ),
        Command::Oracle { file, max_n } => cmd_oracle(file, *max_n),
        Command::Gen3p { m, b, a, out } => cmd_gen(*m, *b, a, out.as_deref()),
        Command::RouteWitness {
            instance,
            partition,
            indices,
            out,
        } => cmd_route(instance, partition, *indices, out.as_deref()),
        Command::VerifyWitness { instance, witness } => cmd_verify(instance, witness),
        Command::Sweep { n, count, seed } => cmd_sweep(*n, *count, *seed),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
