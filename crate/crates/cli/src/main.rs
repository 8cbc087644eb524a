//! `netlap`: exact nullity tools for net Laplacians of signed graphs.
//!
//! Results go to stdout as canonical JSON (sorted keys); diagnostics go to
//! stderr. Exit codes: 0 success, 1 a check failed, 2 bad input, 3 an
//! enumeration cap was exceeded.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use netlap::exactalg::{self, char_poly};
use netlap::forests::{self, DEFAULT_CAP};
use netlap::generate::{generate, CycleProfile, GraphKind};
use netlap::search::{self, CactusFilter, SweepConfig, SweepFilter, SweepMode};
use netlap::structure;
use netlap::theorems::{self, VerifyOptions};
use netlap::{CharPoly, Error, Execution, SignedGraph};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "netlap", version, about = "Exact nullity of net Laplacians of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print nullity, rank and inertia.
    Nullity { input: PathBuf },
    /// Print characteristic polynomial coefficients c0..cn.
    Charpoly {
        input: PathBuf,
        /// Also compute the coefficients from spanning forests and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Structural and spectral report.
    Analyze { input: PathBuf },
    /// Run every applicable check on a graph file or a built-in suite.
    Verify {
        #[arg(required_unless_present = "suite", conflicts_with = "suite")]
        input: Option<PathBuf>,
        #[arg(long)]
        suite: Option<String>,
        /// Largest order for the forest-sum checks.
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print a generated graph.
    Generate {
        kind: Kind,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique order for `join`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        cycles: usize,
        #[arg(long, default_value_t = 4)]
        cycle_len: usize,
        #[arg(long, default_value = "random")]
        profile: String,
        #[arg(long, default_value_t = 0.5)]
        neg_prob: f64,
        #[arg(long, default_value_t = 0.4)]
        edge_prob: f64,
    },
    /// Sweep all (or sampled) signed graphs and print statistics.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Upper end of the order range; defaults to `--n`.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = CactusArg::Any)]
        cactus: CactusArg,
    },
    /// Print theta graphs with two balanced-count cycles and nullity 1, as JSON lines.
    FindTheta {
        /// Largest total path length.
        #[arg(long, default_value_t = 10)]
        max_total: usize,
        /// Print the graphs with nullity above 1 instead.
        #[arg(long)]
        contrast: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print the graph in Graphviz DOT; negative edges are dashed.
    ExportDot { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Unicyclic,
    Cactus,
    Random,
    Connected,
    Join,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CactusArg {
    Any,
    Only,
    Exclude,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Violation { .. } | Error::Numeric(_) => 1,
            Error::Input(_) | Error::Inapplicable(_) => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

type CliResult = Result<Output, Failure>;

/// Text for stdout plus whether the command's checks passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn json(v: Value) -> Self {
        Output { text: v.to_string() + "\n", ok: true }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| input_failure(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))
    }
}

fn load(path: &PathBuf) -> Result<SignedGraph, Failure> {
    Ok(SignedGraph::from_json(&read_input(path)?)?)
}

fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("an integer is a valid JSON number"))
}

fn coeffs(p: &CharPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn cmd_nullity(g: &SignedGraph) -> CliResult {
    let l = g.net_laplacian();
    let rank = exactalg::rank_exact(&l);
    let inertia = exactalg::inertia(&l)?;
    Ok(Output::json(json!({ "inertia": inertia, "nullity": g.n() - rank, "rank": rank })))
}

fn cmd_charpoly(g: &SignedGraph, oracle: bool, cap: usize) -> CliResult {
    let p = char_poly(&g.net_laplacian());
    if !oracle {
        return Ok(Output::json(json!({ "coefficients": coeffs(&p) })));
    }
    let f = forests::char_poly_via_forests(g, cap)?;
    let agree = f == p;
    let mut out = Output::json(json!({ "agree": agree, "coefficients": coeffs(&p), "forest_coefficients": coeffs(&f) }));
    out.ok = agree;
    Ok(out)
}

fn component_report(g: &SignedGraph) -> Result<Value, Failure> {
    let eta = exactalg::nullity(g);
    let mut v = json!({ "n": g.n(), "edges": g.edge_count(), "nullity": eta });
    if g.n() == 0 {
        return Ok(v);
    }
    let beta = structure::cyclomatic_number(g)?;
    let decomposition = structure::block_decomposition(g)?;
    let blocks: Vec<Value> = decomposition
        .blocks
        .iter()
        .map(|b| {
            let kind = if b.is_bridge() { "bridge" } else if b.is_cycle() { "cycle" } else { "other" };
            json!({ "kind": kind, "vertices": b.vertices, "edges": b.edges })
        })
        .collect();
    v["beta"] = json!(beta);
    v["blocks"] = json!(blocks);
    v["cut_vertices"] = json!(decomposition.cut_vertices);
    v["bounds"] = match theorems::nullity_bounds(g) {
        Ok((lo, hi)) => json!({ "lower": lo, "upper": hi, "holds": lo <= eta && eta <= hi }),
        Err(_) => Value::Null,
    };
    match structure::non_cactus_block(g)? {
        None => {
            let cycles = structure::cactus_cycles(g)?;
            let p = theorems::predict_cactus_nullity(g)?;
            v["cactus"] = json!(true);
            v["cycles"] = json!(cycles
                .iter()
                .map(|c| json!({ "vertices": c.vertices, "m_plus": c.m_plus, "m_minus": c.m_minus, "balanced": c.is_balanced_count() }))
                .collect::<Vec<_>>());
            v["prediction"] = json!({
                "regime": p.regime,
                "predicted_nullity": p.predicted_nullity,
                "balanced_cycles": p.balanced_cycle_count,
                "matches": p.predicted_nullity == eta,
            });
        }
        Some(block) => {
            v["cactus"] = json!(false);
            v["shared_edge_witness"] = json!({
                "vertices": block.vertices,
                "edges": block.edges.len(),
                "note": "2-connected block that is not a single cycle, so some cycles share edges",
            });
        }
    }
    if g.n() >= 2 {
        let verdict = theorems::classify_max_nullity(g)?;
        v["max_nullity"] = json!({ "extremal": verdict.structural, "rank_one": verdict.rank_one, "detail": verdict.witness });
    }
    Ok(v)
}

fn cmd_analyze(g: &SignedGraph) -> CliResult {
    let eta = exactalg::nullity(g);
    if structure::is_connected(g) {
        let mut v = component_report(g)?;
        v["connected"] = json!(true);
        return Ok(Output::json(v));
    }
    let mut parts = Vec::new();
    let mut sum = 0;
    for (c, labels) in structure::component_graphs(g) {
        let mut r = component_report(&c)?;
        sum += exactalg::nullity(&c);
        r["labels"] = json!(labels);
        parts.push(r);
    }
    Ok(Output::json(json!({
        "additivity": { "component_sum": sum, "holds": sum == eta },
        "components": parts,
        "connected": false,
        "edges": g.edge_count(),
        "n": g.n(),
        "nullity": eta,
    })))
}

fn cmd_verify(input: Option<PathBuf>, suite: Option<String>, cap: usize, workers: Option<usize>) -> CliResult {
    let opts = VerifyOptions { forest_cap: cap, ..Default::default() };
    if let Some(name) = suite {
        let outcome = search::run_suite(&name, &opts, Execution::from_workers(workers))?;
        let mut out = Output::json(serde_json::to_value(&outcome).expect("serializable"));
        out.ok = outcome.report.all_passed();
        return Ok(out);
    }
    let path = input.expect("clap requires an input without --suite");
    let fixture = netlap::graph::Fixture::from_json(&read_input(&path)?)?;
    let report = theorems::verify_all(&fixture.graph, &VerifyOptions { expected_nullity: fixture.expected_nullity, ..opts })?;
    let passed = report.all_passed();
    let mut out = Output::json(json!({ "checks": report, "passed": passed }));
    out.ok = passed;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    kind: Kind,
    n: usize,
    seed: u64,
    k: usize,
    cycles: usize,
    cycle_len: usize,
    profile: &str,
    neg_prob: f64,
    edge_prob: f64,
) -> CliResult {
    let g = match kind {
        Kind::Join => SignedGraph::complete_join_neg(k)?,
        Kind::Tree => generate(&GraphKind::RandomTree { n, neg_prob }, seed)?,
        Kind::Unicyclic => generate(&GraphKind::RandomUnicyclic { n, cycle_len, neg_prob }, seed)?,
        Kind::Cactus => {
            let profile: CycleProfile = profile.parse()?;
            generate(&GraphKind::RandomCactus { n, cycles, profile, neg_prob }, seed)?
        }
        Kind::Random => generate(&GraphKind::RandomSigned { n, edge_prob, neg_prob }, seed)?,
        Kind::Connected => generate(&GraphKind::RandomConnected { n, edge_prob, neg_prob }, seed)?,
    };
    Ok(Output { text: g.to_json() + "\n", ok: true })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    n: usize,
    n_max: Option<usize>,
    exhaustive: bool,
    samples: Option<u64>,
    seed: u64,
    workers: Option<usize>,
    connected: bool,
    cactus: CactusArg,
) -> CliResult {
    let mode = match (exhaustive, samples) {
        (_, Some(samples)) => SweepMode::Random { samples, seed },
        _ => SweepMode::Exhaustive,
    };
    let cactus = match cactus {
        CactusArg::Any => CactusFilter::Any,
        CactusArg::Only => CactusFilter::Only,
        CactusArg::Exclude => CactusFilter::Exclude,
    };
    let cfg = SweepConfig {
        n: n..=n_max.unwrap_or(n),
        mode,
        filter: SweepFilter { connected_only: connected, cactus },
        execution: Execution::from_workers(workers),
        ..SweepConfig::exhaustive(n)
    };
    let stats = search::sweep(&cfg)?;
    Ok(Output { text: stats.to_json()? + "\n", ok: true })
}

fn cmd_find_theta(max_total: usize, contrast: bool, workers: Option<usize>) -> CliResult {
    let cfg = SweepConfig::theta(max_total).with_execution(Execution::from_workers(workers));
    let outcome = search::find_shared_cycle_examples(&cfg)?;
    let list = if contrast { &outcome.contrast } else { &outcome.findings };
    Ok(Output { text: search::findings_to_jsonl(list), ok: true })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Nullity { input } => cmd_nullity(&load(&input)?),
        Command::Charpoly { input, oracle, cap } => cmd_charpoly(&load(&input)?, oracle, cap),
        Command::Analyze { input } => cmd_analyze(&load(&input)?),
        Command::Verify { input, suite, cap, workers } => cmd_verify(input, suite, cap, workers),
        Command::Generate { kind, n, seed, k, cycles, cycle_len, profile, neg_prob, edge_prob } => {
            cmd_generate(kind, n, seed, k, cycles, cycle_len, &profile, neg_prob, edge_prob)
        }
        Command::Sweep { n, n_max, exhaustive, samples, seed, workers, connected, cactus } => {
            cmd_sweep(n, n_max, exhaustive, samples, seed, workers, connected, cactus)
        }
        Command::FindTheta { max_total, contrast, workers } => cmd_find_theta(max_total, contrast, workers),
        Command::ExportDot { input } => Ok(Output { text: load(&input)?.to_dot(), ok: true }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("netlap: one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("netlap: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
