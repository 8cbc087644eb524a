//! Exhaustive and sampled sweeps over small signed graphs, the theta-graph
//! hunt for balanced-count cycles that share edges, and the built-in corpus.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{input, Error, Result};
use crate::exactalg;
use crate::generate::{generate, theta_graph, CycleProfile, GraphKind};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::parallel::{map_slice, try_fold_range, Execution};
use crate::structure;
use crate::theorems::{run_sweep_check, verify_all, Facts, SweepCheck, VerificationReport, VerifyOptions};

/// Largest order accepted by exhaustive enumeration (`3^15` graphs at 6).
pub const EXHAUSTIVE_MAX_N: usize = 6;

/// Largest order accepted by random sampling.
pub const RANDOM_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub enum SweepMode {
    /// Every labelled signed graph: each vertex pair absent, positive or negative.
    Exhaustive,
    /// Independent samples; each pair absent, positive or negative with equal odds.
    Random { samples: u64, seed: u64 },
    /// Theta graphs whose three path lengths sum to at most `max_total`.
    Theta { max_total: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CactusFilter {
    #[default]
    Any,
    Only,
    Exclude,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepFilter {
    pub connected_only: bool,
    /// `Only` and `Exclude` both imply connected-only.
    pub cactus: CactusFilter,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: RangeInclusive<usize>,
    pub mode: SweepMode,
    pub filter: SweepFilter,
    pub checks: Vec<SweepCheck>,
    pub execution: Execution,
}

impl SweepConfig {
    /// Exhaustive sweep of one order with the default checks.
    pub fn exhaustive(n: usize) -> Self {
        SweepConfig {
            n: n..=n,
            mode: SweepMode::Exhaustive,
            filter: SweepFilter::default(),
            checks: SweepCheck::DEFAULT.to_vec(),
            execution: Execution::default(),
        }
    }

    pub fn random(n: RangeInclusive<usize>, samples: u64, seed: u64) -> Self {
        SweepConfig { n, mode: SweepMode::Random { samples, seed }, ..Self::exhaustive(0) }
    }

    pub fn theta(max_total: usize) -> Self {
        SweepConfig { n: 0..=usize::MAX, mode: SweepMode::Theta { max_total }, ..Self::exhaustive(0) }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_filter(mut self, filter: SweepFilter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_checks(mut self, checks: Vec<SweepCheck>) -> Self {
        self.checks = checks;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CheckTally {
    pub applicable: u64,
    pub passed: u64,
}

/// Aggregated sweep results. Merging is commutative, so the totals do not
/// depend on how the range was split among workers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepStats {
    pub graphs_enumerated: u64,
    /// Graphs that passed the filters.
    pub graphs_checked: u64,
    pub connected: u64,
    pub bounds_violations: u64,
    /// `(n, β, η) → count`, with `β = |E| − |V| + c`.
    pub histogram: BTreeMap<(usize, usize, usize), u64>,
    pub checks: BTreeMap<String, CheckTally>,
    /// Connected graphs with `n ≥ 2` and `η = n − 1`, sorted.
    pub max_nullity_graphs: Vec<SignedGraph>,
}

impl SweepStats {
    fn merge(mut self, other: SweepStats) -> SweepStats {
        self.graphs_enumerated += other.graphs_enumerated;
        self.graphs_checked += other.graphs_checked;
        self.connected += other.connected;
        self.bounds_violations += other.bounds_violations;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        for (k, v) in other.checks {
            let t = self.checks.entry(k).or_default();
            t.applicable += v.applicable;
            t.passed += v.passed;
        }
        self.max_nullity_graphs.extend(other.max_nullity_graphs);
        self.max_nullity_graphs.sort();
        self
    }

    pub fn nullity_distribution(&self) -> BTreeMap<usize, u64> {
        let mut d = BTreeMap::new();
        for (&(_, _, eta), &c) in &self.histogram {
            *d.entry(eta).or_default() += c;
        }
        d
    }

    /// One representative per isomorphism class of the maximum-nullity graphs.
    pub fn max_nullity_classes(&self) -> Result<Vec<SignedGraph>> {
        let mut classes: Vec<SignedGraph> = self.max_nullity_graphs.iter().map(SignedGraph::canonical_form).collect::<Result<_>>()?;
        classes.sort();
        classes.dedup();
        Ok(classes)
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Bin {
            beta: usize,
            count: u64,
            n: usize,
            nullity: usize,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            bounds_violations: u64,
            checks: &'a BTreeMap<String, CheckTally>,
            connected: u64,
            graphs_checked: u64,
            graphs_enumerated: u64,
            histogram: Vec<Bin>,
            max_nullity_classes: Vec<SignedGraph>,
            max_nullity_count: usize,
            nullity_distribution: BTreeMap<String, u64>,
        }
        let out = Out {
            bounds_violations: self.bounds_violations,
            checks: &self.checks,
            connected: self.connected,
            graphs_checked: self.graphs_checked,
            graphs_enumerated: self.graphs_enumerated,
            histogram: self.histogram.iter().map(|(&(n, beta, nullity), &count)| Bin { beta, count, n, nullity }).collect(),
            max_nullity_classes: self.max_nullity_classes()?,
            max_nullity_count: self.max_nullity_graphs.len(),
            nullity_distribution: self.nullity_distribution().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        };
        Ok(serde_json::to_string(&out).expect("stats serialization is infallible"))
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes `code` as base-3 digits over the vertex pairs in lexicographic
/// order, least significant digit first: 0 absent, 1 positive, 2 negative.
pub fn graph_from_code(n: usize, mut code: u64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match code % 3 {
                1 => edges.push(Edge { u, v, sign: Sign::Pos }),
                2 => edges.push(Edge { u, v, sign: Sign::Neg }),
                _ => {}
            }
            code /= 3;
        }
    }
    SignedGraph::from_sorted_unchecked(n, edges)
}

pub fn graph_count(n: usize) -> u64 {
    3u64.pow(pair_count(n) as u32)
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                1 => edges.push(Edge { u, v, sign: Sign::Pos }),
                2 => edges.push(Edge { u, v, sign: Sign::Neg }),
                _ => {}
            }
        }
    }
    SignedGraph::from_sorted_unchecked(n, edges)
}

/// Per-sample seed, independent of how samples are split among workers.
fn sample_seed(seed: u64, i: u64) -> u64 {
    seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn passes_filter(filter: &SweepFilter, f: &Facts) -> Result<bool> {
    let connected_only = filter.connected_only || filter.cactus != CactusFilter::Any;
    if connected_only && !f.connected() {
        return Ok(false);
    }
    Ok(match filter.cactus {
        CactusFilter::Any => true,
        CactusFilter::Only => structure::is_cactus(f.g)?,
        CactusFilter::Exclude => !structure::is_cactus(f.g)?,
    })
}

fn process(cfg: &SweepConfig, g: SignedGraph, acc: &mut SweepStats) -> Result<()> {
    acc.graphs_enumerated += 1;
    let f = Facts::new(&g);
    if !passes_filter(&cfg.filter, &f)? {
        return Ok(());
    }
    acc.graphs_checked += 1;
    let n = g.n();
    if f.connected() {
        acc.connected += 1;
        if n >= 2 && f.nullity == n - 1 {
            acc.max_nullity_graphs.push(g.clone());
        }
    }
    *acc.histogram.entry((n, f.beta(), f.nullity)).or_default() += 1;
    for &check in &cfg.checks {
        for r in run_sweep_check(check, &f)? {
            if !r.applicable {
                continue;
            }
            let t = acc.checks.entry(r.name.clone()).or_default();
            t.applicable += 1;
            if r.passed {
                t.passed += 1;
            } else {
                if check == SweepCheck::Bounds {
                    acc.bounds_violations += 1;
                }
                return Err(Error::Violation {
                    check: format!("{}: {}", r.name, r.witness.unwrap_or_default()),
                    graph: g.to_json(),
                });
            }
        }
    }
    Ok(())
}

/// Runs the configured checks over every graph of the sweep. Any violation
/// aborts all workers and is returned as [`Error::Violation`] carrying the
/// offending graph's JSON.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepStats> {
    let mut total = SweepStats::default();
    match &cfg.mode {
        SweepMode::Exhaustive => {
            if *cfg.n.end() > EXHAUSTIVE_MAX_N {
                return input(format!("exhaustive sweeps are limited to n <= {EXHAUSTIVE_MAX_N}, got {}", cfg.n.end()));
            }
            for n in cfg.n.clone() {
                let part = try_fold_range(
                    cfg.execution,
                    0..graph_count(n),
                    SweepStats::default,
                    |acc, code| process(cfg, graph_from_code(n, code), acc),
                    SweepStats::merge,
                )?;
                total = total.merge(part);
            }
        }
        SweepMode::Random { samples, seed } => {
            let (lo, hi) = (*cfg.n.start(), *cfg.n.end());
            if lo > hi || hi > RANDOM_MAX_N {
                return input(format!("random sweeps need 0 <= n_min <= n_max <= {RANDOM_MAX_N}"));
            }
            total = try_fold_range(
                cfg.execution,
                0..*samples,
                SweepStats::default,
                |acc, i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(*seed, i));
                    let n = rng.gen_range(lo..=hi);
                    process(cfg, random_graph(n, &mut rng), acc)
                },
                SweepStats::merge,
            )?;
        }
        SweepMode::Theta { .. } => return input("theta mode is handled by find_shared_cycle_examples"),
    }
    Ok(total)
}

/// `(n, β, η) → count` over the sweep.
pub fn nullity_histogram(cfg: &SweepConfig) -> Result<BTreeMap<(usize, usize, usize), u64>> {
    Ok(sweep(cfg)?.histogram)
}

/// A graph exhibiting a nullity phenomenon, stored with the values that
/// make it interesting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub beta: usize,
    /// `[m⁺, m⁻]` for each cycle considered.
    pub cycle_profile: Vec<[usize; 2]>,
    pub graph: SignedGraph,
    pub note: String,
    pub nullity: usize,
}

impl Finding {
    /// Recomputes the nullity of the stored graph.
    pub fn reverify(&self) -> bool {
        exactalg::nullity(&self.graph) == self.nullity
    }

    pub fn balanced_cycles(&self) -> usize {
        self.cycle_profile.iter().filter(|[p, m]| p == m).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finding serialization is infallible")
    }
}

pub fn findings_to_jsonl(findings: &[Finding]) -> String {
    findings.iter().map(|f| f.to_json() + "\n").collect()
}

pub fn findings_from_jsonl(text: &str) -> Result<Vec<Finding>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Input(format!("bad finding line: {e}"))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ThetaOutcome {
    /// Sign patterns examined after symmetry reduction.
    pub examined: u64,
    /// At least two balanced-count cycles, nullity 1.
    pub findings: Vec<Finding>,
    /// At least two balanced-count cycles, nullity above 1.
    pub contrast: Vec<Finding>,
}

impl ThetaOutcome {
    fn merge(mut self, other: ThetaOutcome) -> ThetaOutcome {
        self.examined += other.examined;
        self.findings.extend(other.findings);
        self.contrast.extend(other.contrast);
        self
    }

    fn sort(&mut self) {
        let key = |f: &Finding| (f.graph.n(), f.graph.clone());
        self.findings.sort_by_key(key);
        self.contrast.sort_by_key(key);
    }
}

/// Length triples `a ≤ b ≤ c` with `b ≥ 2` and `a + b + c ≤ max_total`.
pub fn theta_length_triples(max_total: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=max_total {
        for b in a.max(2)..=max_total {
            for c in b..=max_total {
                if a + b + c <= max_total {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn split_mask(lengths: [usize; 3], mask: u64) -> [Vec<bool>; 3] {
    let mut bit = 0;
    lengths.map(|len| {
        let v = (0..len).map(|i| mask >> (bit + i) & 1 == 1).collect();
        bit += len;
        v
    })
}

/// True when the pattern is the least image under the theta automorphisms:
/// swapping the terminals (reversing every path) and permuting paths of
/// equal length.
fn is_canonical_pattern(lengths: [usize; 3], paths: &[Vec<bool>; 3]) -> bool {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in PERMS {
        if perm.iter().enumerate().any(|(i, &p)| lengths[p] != lengths[i]) {
            continue;
        }
        for reverse in [false, true] {
            let image: [Vec<bool>; 3] = perm.map(|p| {
                let mut v = paths[p].clone();
                if reverse {
                    v.reverse();
                }
                v
            });
            if image < *paths {
                return false;
            }
        }
    }
    true
}

fn examine_theta(lengths: [usize; 3], mask: u64, out: &mut ThetaOutcome) -> Result<()> {
    let paths = split_mask(lengths, mask);
    if !is_canonical_pattern(lengths, &paths) {
        return Ok(());
    }
    out.examined += 1;
    let signs = paths.clone().map(|p| p.into_iter().map(|neg| if neg { -1 } else { 1 }).collect::<Vec<i64>>());
    let g = theta_graph(&signs)?;
    let eta = exactalg::nullity(&g);
    let beta = structure::cyclomatic_number(&g)?;
    if eta < 1 || eta > (beta + 1).min(g.n() - 1) {
        return Err(Error::Violation { check: format!("nullity_bounds: theta{lengths:?} has nullity {eta}"), graph: g.to_json() });
    }
    let counts: Vec<[usize; 2]> = paths.iter().map(|p| {
        let neg = p.iter().filter(|&&b| b).count();
        [p.len() - neg, neg]
    }).collect();
    let profile: Vec<[usize; 2]> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| [counts[i][0] + counts[j][0], counts[i][1] + counts[j][1]])
        .collect();
    let balanced = profile.iter().filter(|[p, m]| p == m).count();
    if balanced < 2 {
        return Ok(());
    }
    let [a, b, c] = lengths;
    let finding = |note: &str| Finding {
        beta,
        cycle_profile: profile.clone(),
        graph: g.clone(),
        note: format!("theta({a},{b},{c}): {balanced} of 3 cycles balanced-count, cycles share edges, {note}"),
        nullity: eta,
    };
    if eta == 1 {
        out.findings.push(finding("nullity 1"));
    } else {
        out.contrast.push(finding(&format!("nullity {eta}")));
    }
    Ok(())
}

/// Enumerates theta graphs up to symmetry and collects those with at least
/// two balanced-count cycles, split by whether the nullity is 1. Every
/// examined graph is also checked against the nullity bounds.
pub fn find_shared_cycle_examples(cfg: &SweepConfig) -> Result<ThetaOutcome> {
    let SweepMode::Theta { max_total } = cfg.mode else {
        return input("find_shared_cycle_examples needs theta mode");
    };
    if max_total > 24 {
        return input(format!("theta path lengths may total at most 24, got {max_total}"));
    }
    let mut total = ThetaOutcome::default();
    for lengths in theta_length_triples(max_total) {
        let bits = lengths.iter().sum::<usize>() as u32;
        let part = try_fold_range(
            cfg.execution,
            0..1u64 << bits,
            ThetaOutcome::default,
            |acc, mask| examine_theta(lengths, mask, acc),
            ThetaOutcome::merge,
        )?;
        total = total.merge(part);
    }
    total.sort();
    Ok(total)
}

/// Hand-picked graphs covering each structural class, with known nullities.
pub fn named_fixtures() -> Vec<(String, SignedGraph, usize)> {
    let g = |n, e: &[(usize, usize, i64)]| SignedGraph::new(n, e.iter().copied()).expect("fixture is valid");
    let mut v = vec![
        ("single_vertex".into(), SignedGraph::edgeless(1), 1),
        ("edgeless_3".into(), SignedGraph::edgeless(3), 3),
        ("negative_edge".into(), g(2, &[(0, 1, -1)]), 1),
        ("positive_triangle".into(), SignedGraph::complete(3, 1).unwrap(), 1),
        ("mixed_triangle".into(), g(3, &[(0, 1, 1), (0, 2, -1), (1, 2, 1)]), 1),
        ("balanced_square".into(), SignedGraph::cycle(&[1, 1, -1, -1]).unwrap(), 2),
        ("alternating_square".into(), SignedGraph::cycle(&[1, -1, 1, -1]).unwrap(), 2),
        ("unbalanced_square".into(), SignedGraph::cycle(&[1, 1, 1, -1]).unwrap(), 1),
        ("balanced_hexagon".into(), SignedGraph::cycle(&[1, -1, -1, 1, 1, -1]).unwrap(), 2),
        ("signed_path_5".into(), SignedGraph::path(&[1, -1, -1, 1]).unwrap(), 1),
        ("negative_star_5".into(), SignedGraph::star(&[-1, -1, -1, -1]).unwrap(), 1),
        ("positive_k4".into(), SignedGraph::complete(4, 1).unwrap(), 1),
        (
            "two_balanced_squares".into(),
            SignedGraph::cycle(&[1, 1, -1, -1]).unwrap().coalesce(0, &SignedGraph::cycle(&[1, -1, 1, -1]).unwrap(), 0).unwrap(),
            3,
        ),
        (
            "square_and_triangle".into(),
            SignedGraph::cycle(&[1, 1, -1, -1]).unwrap().coalesce(2, &SignedGraph::complete(3, -1).unwrap(), 0).unwrap(),
            2,
        ),
        ("theta_1_2_2".into(), crate::generate::theta_lengths(1, 2, 2).unwrap(), 1),
        (
            "triangles_and_bridge".into(),
            SignedGraph::complete(3, 1).unwrap().disjoint_union(&SignedGraph::complete(3, -1).unwrap()).add_edge(0, 3, -1).unwrap(),
            1,
        ),
        ("triangle_plus_edge".into(), SignedGraph::complete(3, 1).unwrap().disjoint_union(&g(2, &[(0, 1, -1)])), 2),
    ];
    for k in 1..=4 {
        v.push((format!("complete_join_neg_{k}"), SignedGraph::complete_join_neg(k).unwrap(), 2 * k - 1));
        v.push((format!("negated_join_{k}"), SignedGraph::complete_join_neg(k).unwrap().negate(), 2 * k - 1));
    }
    v
}

/// Seeded random graphs from every generator family.
pub fn generated_corpus(seed: u64, per_family: usize) -> Result<Vec<SignedGraph>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let profiles = [CycleProfile::Unbalanced, CycleProfile::Balanced, CycleProfile::Mixed, CycleProfile::Random];
    for i in 0..per_family {
        let s = rng.gen();
        let kinds = [
            GraphKind::RandomTree { n: rng.gen_range(1..=10), neg_prob: 0.5 },
            GraphKind::RandomUnicyclic { n: rng.gen_range(4..=10), cycle_len: rng.gen_range(3..=4), neg_prob: 0.5 },
            GraphKind::RandomCactus { n: rng.gen_range(7..=10), cycles: 2, profile: profiles[i % 4], neg_prob: 0.5 },
            GraphKind::RandomConnected { n: rng.gen_range(2..=8), edge_prob: 0.5, neg_prob: 0.5 },
            GraphKind::RandomSigned { n: rng.gen_range(2..=8), edge_prob: 0.3, neg_prob: 0.5 },
        ];
        for kind in &kinds {
            out.push(generate(kind, s)?);
        }
        let mut theta = [0; 3].map(|_| (0..rng.gen_range(2..=3)).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect::<Vec<i64>>());
        theta[0].truncate(rng.gen_range(1..=theta[0].len()));
        out.push(theta_graph(&theta)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub graphs: usize,
    /// One entry per check name.
    pub report: VerificationReport,
}

impl SuiteOutcome {
    pub fn executed_kinds(&self) -> Vec<&str> {
        self.report.executed_kinds()
    }
}

/// Runs [`verify_all`] over a named suite. `"small"` is the fixtures, a
/// seeded generated corpus and every signed graph with `n ≤ 4`.
pub fn run_suite(name: &str, opts: &VerifyOptions, exec: Execution) -> Result<SuiteOutcome> {
    if name != "small" {
        return input(format!("unknown suite {name:?}; available: small"));
    }
    let mut graphs: Vec<(SignedGraph, Option<usize>)> = named_fixtures().into_iter().map(|(_, g, eta)| (g, Some(eta))).collect();
    graphs.extend(generated_corpus(7, 24)?.into_iter().map(|g| (g, None)));
    for n in 1..=4 {
        graphs.extend((0..graph_count(n)).map(|code| (graph_from_code(n, code), None)));
    }
    let reports = map_slice(exec, &graphs, |(g, eta)| verify_all(g, &VerifyOptions { expected_nullity: *eta, ..*opts }));
    let mut all = VerificationReport::default();
    for r in reports {
        all.checks.extend(r?.checks);
    }
    Ok(SuiteOutcome { graphs: graphs.len(), report: all.summarize() })
}

/// Serializes a [`SuiteOutcome`] as `{"checks":[...],"graphs":N,"passed":bool}`.
impl Serialize for SuiteOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SuiteOutcome", 3)?;
        st.serialize_field("checks", &self.report)?;
        st.serialize_field("graphs", &self.graphs)?;
        st.serialize_field("passed", &self.report.all_passed())?;
        st.end()
    }
}
