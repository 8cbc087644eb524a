//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Expected values come from the oracles in `common` (rational elimination,
//! Faddeev-LeVerrier, BFS cycle tracing, nalgebra spectra), never from the
//! library routine under test.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use netlap::exactalg::{self, char_poly, eigenvalues_float, float_zero_count, inertia, rank_exact};
use netlap::forests::char_poly_via_forests;
use netlap::generate::{generate, CycleProfile, GraphKind};
use netlap::search::{self, find_shared_cycle_examples, named_fixtures, SweepConfig};
use netlap::structure::{self, prune_pendant_trees};
use netlap::theorems::{self, SweepCheck, INTERLACING_TOL};
use netlap::{EdgeRef, SignedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !($cond) {
            return Err(format!($($fmt)+));
        }
    };
}

fn random_connected_corpus(count: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let kind = GraphKind::RandomConnected {
                n: rng.gen_range(2..=8),
                edge_prob: rng.gen_range(0.1..0.9),
                neg_prob: rng.gen_range(0.1..0.9),
            };
            generate(&kind, rng.gen()).unwrap()
        })
        .collect()
}

fn cactus(profile: CycleProfile, rng: &mut ChaCha8Rng) -> SignedGraph {
    let (lo, per) = match profile {
        CycleProfile::Mixed => (2, 3),
        CycleProfile::Balanced => (1, 3),
        _ => (1, 2),
    };
    let cycles = rng.gen_range(lo..=8);
    let n = rng.gen_range(cycles * per + 1..=30);
    generate(&GraphKind::RandomCactus { n, cycles, profile, neg_prob: 0.5 }, rng.gen()).unwrap()
}

/// Every graph used by the corpus-wide criteria.
fn corpus() -> Vec<SignedGraph> {
    let mut v: Vec<SignedGraph> = named_fixtures().into_iter().map(|(_, g, _)| g).collect();
    v.extend(random_connected_corpus(500, 1));
    v.extend(search::generated_corpus(5, 40).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [CycleProfile::Unbalanced, CycleProfile::Balanced, CycleProfile::Mixed] {
        v.extend((0..30).map(|_| cactus(p, &mut rng)));
    }
    for n in 1..=4 {
        v.extend((0..3u64.pow((n * (n - 1) / 2) as u32)).map(|c| decode(n, c)));
    }
    v
}

fn beta(g: &SignedGraph) -> usize {
    g.edge_count() + 1 - g.n()
}

fn oracle_equivalence() -> Outcome {
    let mut graphs: Vec<SignedGraph> = named_fixtures().into_iter().map(|(_, g, _)| g).collect();
    let fixtures = graphs.len();
    graphs.extend(random_connected_corpus(500, 1));
    let mut coefficients = 0;
    for g in &graphs {
        let berkowitz = char_poly(&g.net_laplacian());
        let forests = char_poly_via_forests(g, 8).map_err(|e| e.to_string())?;
        let reference = leverrier(&laplacian_rows(g));
        ensure!(forests == berkowitz, "{g}: forests {forests} vs division-free {berkowitz}");
        ensure!(berkowitz.coeffs() == reference.as_slice(), "{g}: {berkowitz} vs reference {reference:?}");
        coefficients += reference.len();
    }
    Ok(format!("{} graphs ({fixtures} fixtures + 500 random connected, n <= 8), {coefficients} coefficients equal", graphs.len()))
}

fn bounds_sweep() -> Outcome {
    let mut detail = Vec::new();
    for n in [4usize, 5] {
        let cfg = SweepConfig::exhaustive(n).with_checks(vec![SweepCheck::Bounds]);
        let stats = search::sweep(&cfg).map_err(|e| e.to_string())?;
        let mut connected = 0;
        for code in 0..3u64.pow((n * (n - 1) / 2) as u32) {
            let g = decode(n, code);
            if !is_connected(&g) {
                continue;
            }
            connected += 1;
            let eta = oracle_nullity(&g);
            ensure!(1 <= eta && eta <= (beta(&g) + 1).min(n - 1), "{g}: nullity {eta} out of bounds");
        }
        ensure!(stats.graphs_enumerated == 3u64.pow((n * (n - 1) / 2) as u32), "n = {n}: enumerated {}", stats.graphs_enumerated);
        ensure!(stats.bounds_violations == 0, "n = {n}: {} violations", stats.bounds_violations);
        ensure!(stats.connected == connected, "n = {n}: sweep saw {} connected, oracle {connected}", stats.connected);
        ensure!(stats.checks["nullity_bounds"].passed == connected, "n = {n}: bound checked on {:?}", stats.checks["nullity_bounds"]);
        detail.push(format!("n={n}: {} graphs, {connected} connected, 0 violations", stats.graphs_enumerated));
    }
    Ok(detail.join("; "))
}

fn max_nullity() -> Outcome {
    let stats = search::sweep(&SweepConfig::exhaustive(4)).map_err(|e| e.to_string())?;
    let found: BTreeSet<SignedGraph> = stats.max_nullity_graphs.iter().cloned().collect();
    let join = SignedGraph::complete_join_neg(2).unwrap();
    let mut expected = BTreeSet::new();
    for p in permutations(4) {
        expected.insert(join.relabel(&p).unwrap());
        expected.insert(join.negate().relabel(&p).unwrap());
    }
    let by_oracle: BTreeSet<SignedGraph> =
        (0..729).map(|c| decode(4, c)).filter(|g| is_connected(g) && oracle_nullity(g) == 3).collect();
    ensure!(found == expected, "sweep found {} graphs, expected {}", found.len(), expected.len());
    ensure!(by_oracle == expected, "oracle found {} graphs, expected {}", by_oracle.len(), expected.len());
    for k in 2..=5 {
        let g = SignedGraph::complete_join_neg(k).unwrap();
        let (lib, reference) = (exactalg::nullity(&g), oracle_nullity(&g));
        ensure!(lib == 2 * k - 1 && reference == 2 * k - 1, "k = {k}: nullity {lib}, oracle {reference}");
    }
    Ok(format!("n=4: {} labelled graphs with nullity 3 = copies of the join and its negation; joins k=2..5 give 3,5,7,9", found.len()))
}

fn cactus_extremes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut max_beta = 0;
    for profile in [CycleProfile::Unbalanced, CycleProfile::Balanced, CycleProfile::Mixed] {
        for _ in 0..200 {
            let g = cactus(profile, &mut rng);
            ensure!(g.n() <= 30 && beta(&g) <= 8 && is_connected(&g), "generator out of range: {g}");
            let cycles = cactus_cycle_counts(&g);
            ensure!(cycles.len() == beta(&g), "{g}: {} cycles traced for beta {}", cycles.len(), beta(&g));
            let balanced = cycles.iter().filter(|(p, m)| p == m).count();
            match profile {
                CycleProfile::Unbalanced => ensure!(balanced == 0, "{g}: balanced cycle in unbalanced regime"),
                CycleProfile::Balanced => ensure!(balanced == cycles.len(), "{g}: unbalanced cycle in balanced regime"),
                _ => ensure!(balanced > 0 && balanced < cycles.len(), "{g}: not mixed"),
            }
            let eta = oracle_nullity(&g);
            let want = 1 + balanced;
            ensure!(eta == want, "{g} ({profile:?}): nullity {eta}, expected {want}");
            let p = theorems::predict_cactus_nullity(&g).map_err(|e| e.to_string())?;
            ensure!(p.predicted_nullity == eta && exactalg::nullity(&g) == eta, "{g}: library disagrees");
            max_beta = max_beta.max(beta(&g));
        }
    }
    Ok(format!("200 all-unbalanced (nullity 1), 200 all-balanced (beta+1), 200 mixed (1 + #balanced); beta up to {max_beta}"))
}

fn random_connected(rng: &mut ChaCha8Rng, max_n: usize) -> SignedGraph {
    let kind = GraphKind::RandomConnected { n: rng.gen_range(1..=max_n), edge_prob: rng.gen_range(0.0..0.8), neg_prob: 0.5 };
    generate(&kind, rng.gen()).unwrap()
}

fn lemma_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    // disjoint unions
    for _ in 0..100 {
        let parts: Vec<SignedGraph> = (0..rng.gen_range(2..=3)).map(|_| random_connected(&mut rng, 5)).collect();
        let g = parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.disjoint_union(p));
        let sum: usize = parts.iter().map(oracle_nullity).sum();
        ensure!(!is_connected(&g) && exactalg::nullity(&g) == sum, "{g}: additivity fails ({sum})");
    }
    // trees
    for _ in 0..200 {
        let t = generate(&GraphKind::RandomTree { n: rng.gen_range(1..=25), neg_prob: rng.gen_range(0.0..=1.0) }, rng.gen()).unwrap();
        ensure!(exactalg::nullity(&t) == 1 && oracle_nullity(&t) == 1, "tree {t} has nullity != 1");
    }
    // every sign pattern of every cycle length 3..=8
    let mut cycles = 0;
    for n in 3..=8usize {
        for mask in 0..1u32 << n {
            let signs: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let g = SignedGraph::cycle(&signs).unwrap();
            let neg = mask.count_ones() as usize;
            let want = if 2 * neg == n { 2 } else { 1 };
            ensure!(exactalg::nullity(&g) == want && oracle_nullity(&g) == want, "{g}: expected {want}");
            cycles += 1;
        }
    }
    // coalescence and bridges
    for _ in 0..200 {
        let (g1, g2) = (random_connected(&mut rng, 6), random_connected(&mut rng, 6));
        let (u, v) = (rng.gen_range(0..g1.n()), rng.gen_range(0..g2.n()));
        let joined = g1.coalesce(u, &g2, v).unwrap();
        let (a, b, c) = (oracle_nullity(&g1), oracle_nullity(&g2), oracle_nullity(&joined));
        ensure!(c + 1 == a + b, "coalescence {g1}@{u} . {g2}@{v}: {c} != {a}+{b}-1");
        ensure!(theorems::verify_coalescence(&g1, u, &g2, v).unwrap().passed, "library coalescence check failed");
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        let bridged = g1.disjoint_union(&g2).add_edge(u, g1.n() + v, s).unwrap();
        let e = bridged.find_edge(u, g1.n() + v).unwrap();
        ensure!(oracle_nullity(&bridged) + 1 >= a + b, "bridge {bridged}: inequality fails");
        ensure!(theorems::verify_cut_edge_inequality(&bridged, e).unwrap().passed, "library cut-edge check failed");
    }
    // pendant trees
    for _ in 0..200 {
        let mut g = random_connected(&mut rng, 6);
        let core = oracle_nullity(&g);
        for _ in 0..rng.gen_range(1..=3) {
            let t = generate(&GraphKind::RandomTree { n: rng.gen_range(2..=5), neg_prob: 0.5 }, rng.gen()).unwrap();
            let (u, v) = (rng.gen_range(0..g.n()), rng.gen_range(0..t.n()));
            g = g.coalesce(u, &t, v).unwrap();
        }
        let (pruned, _) = prune_pendant_trees(&g).unwrap();
        ensure!(oracle_nullity(&g) == core, "{g}: attaching trees changed the nullity");
        ensure!(oracle_nullity(&pruned) == core, "{g}: pruning to {pruned} changed the nullity");
    }
    // cycle-edge deletion on pure cacti
    let mut deletions = 0;
    for profile in [CycleProfile::Balanced, CycleProfile::Unbalanced] {
        for _ in 0..100 {
            let g = cactus(profile, &mut rng);
            let eta = oracle_nullity(&g);
            for cycle in cactus_cycle_edges(&g) {
                for e in cycle {
                    let after = oracle_nullity(&g.delete_edge(EdgeRef(e)).unwrap());
                    if profile == CycleProfile::Balanced {
                        ensure!(after + 1 == eta, "{g}: deleting edge {e} gives {after} from {eta}");
                    } else {
                        ensure!(after == 1 && eta == 1, "{g}: deleting edge {e} gives {after} from {eta}");
                    }
                    deletions += 1;
                }
            }
        }
    }
    Ok(format!(
        "100 unions, 200 trees, {cycles} signed cycles, 200 coalescences + 200 bridges, 200 pruned graphs, {deletions} cycle-edge deletions on 200 pure cacti"
    ))
}

fn interlacing(corpus: &[SignedGraph]) -> Outcome {
    let mut edges = 0;
    for g in corpus.iter().filter(|g| g.n() <= 10) {
        let eta = oracle_nullity(g);
        let spec = reference_spectrum(g);
        for e in g.edge_refs() {
            let h = g.delete_edge(e).unwrap();
            let check = theorems::verify_interlacing(g, e).map_err(|e| e.to_string())?;
            ensure!(check.passed, "{:?}", check.witness);
            let sh = reference_spectrum(&h);
            let (upper, lower) = if g.edge(e).unwrap().sign.is_positive() { (&spec, &sh) } else { (&sh, &spec) };
            for i in 0..g.n() {
                ensure!(upper[i] >= lower[i] - INTERLACING_TOL, "{g} minus {e:?}: reference chain breaks at {i}");
                ensure!(i + 1 == g.n() || lower[i] >= upper[i + 1] - INTERLACING_TOL, "{g} minus {e:?}: reference chain breaks at {i}");
            }
            ensure!(oracle_nullity(&h).abs_diff(eta) <= 1, "{g} minus {e:?}: nullity jumps by more than 1");
            edges += 1;
        }
    }
    Ok(format!("{edges} edge deletions: both chains within {INTERLACING_TOL:e}, |step| <= 1 exact"))
}

fn tree_inertia() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let t = generate(&GraphKind::RandomTree { n: rng.gen_range(1..=30), neg_prob: rng.gen_range(0.0..=1.0) }, rng.gen()).unwrap();
        let mp = t.edges().iter().filter(|e| e.sign.value() > 0).count();
        let mm = t.edge_count() - mp;
        let got = inertia(&t.net_laplacian()).map_err(|e| e.to_string())?.as_triple();
        ensure!(got == (mp, mm, 1), "{t}: inertia {got:?}, expected ({mp}, {mm}, 1)");
        let spec = reference_spectrum(&t);
        let tol = 1e-8 * (1.0 + 2.0 * t.n() as f64);
        let counts = (
            spec.iter().filter(|&&x| x > tol).count(),
            spec.iter().filter(|&&x| x < -tol).count(),
            spec.iter().filter(|&&x| x.abs() <= tol).count(),
        );
        ensure!(counts == got, "{t}: reference spectrum counts {counts:?}");
    }
    Ok("200 random trees (n <= 30): inertia (m+, m-, 1) exactly".into())
}

/// Terminals and `(m⁺, m⁻)` of the three paths of a theta graph, found by
/// walking from one terminal.
fn theta_paths(g: &SignedGraph) -> Option<Vec<(usize, usize)>> {
    let deg = |v: usize| g.edges().iter().filter(|e| e.u == v || e.v == v).count();
    let terminals: Vec<usize> = (0..g.n()).filter(|&v| deg(v) == 3).collect();
    if terminals.len() != 2 || (0..g.n()).any(|v| deg(v) != 2 && deg(v) != 3) || !is_connected(g) {
        return None;
    }
    let (s, t) = (terminals[0], terminals[1]);
    let mut paths = Vec::new();
    for (i, e) in g.edges().iter().enumerate().filter(|(_, e)| e.u == s || e.v == s) {
        let (mut prev_edge, mut at) = (i, if e.u == s { e.v } else { e.u });
        let mut neg = usize::from(e.sign.value() < 0);
        let mut len = 1;
        while at != t {
            let (j, f) = g.edges().iter().enumerate().find(|&(j, f)| j != prev_edge && (f.u == at || f.v == at))?;
            neg += usize::from(f.sign.value() < 0);
            len += 1;
            at = if f.u == at { f.v } else { f.u };
            prev_edge = j;
        }
        paths.push((len - neg, neg));
    }
    Some(paths)
}

fn theta_witness() -> Outcome {
    let start = Instant::now();
    let out = find_shared_cycle_examples(&SweepConfig::theta(10)).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure!(!out.findings.is_empty(), "no witness among {} theta graphs", out.examined);
    for f in &out.findings {
        let paths = theta_paths(&f.graph).ok_or_else(|| format!("{} is not a theta graph", f.graph))?;
        let total: usize = paths.iter().map(|(p, m)| p + m).sum();
        ensure!(total <= 10, "{}: total path length {total}", f.graph);
        let balanced = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| paths[i].0 + paths[j].0 == paths[i].1 + paths[j].1)
            .count();
        ensure!(balanced >= 2, "{}: only {balanced} balanced-count cycles", f.graph);
        ensure!(!structure::is_cactus(&f.graph).unwrap(), "{} reported as cactus", f.graph);
        ensure!(oracle_nullity(&f.graph) == 1 && f.nullity == 1 && f.reverify(), "{}: nullity is not 1", f.graph);
    }
    ensure!(secs < 60.0, "took {secs:.1}s");
    Ok(format!(
        "{} witnesses (e.g. {}) among {} theta graphs up to symmetry; {} contrast graphs with nullity > 1",
        out.findings.len(),
        out.findings[0].graph,
        out.examined,
        out.contrast.len()
    ))
}

fn cross_path(corpus: &[SignedGraph]) -> Outcome {
    for g in corpus {
        let l = g.net_laplacian();
        let by_rank = g.n() - rank_exact(&l);
        let by_poly = char_poly(&l).trailing_zeros();
        let ev = eigenvalues_float(&l).map_err(|e| e.to_string())?;
        let by_float = float_zero_count(&l, &ev);
        let reference = oracle_nullity(g);
        ensure!(
            by_rank == reference && by_poly == reference && by_float == reference,
            "{g}: rank {by_rank}, char poly {by_poly}, float {by_float}, oracle {reference}"
        );
    }
    Ok(format!("{} corpus graphs: rank, char-poly trailing zeros and float zero count agree", corpus.len()))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("nullity bounds, exhaustive n=4,5", Box::new(bounds_sweep)),
        ("maximum nullity classification", Box::new(max_nullity)),
        ("cactus extremes and mixed formula", Box::new(cactus_extremes)),
        ("lemma suite", Box::new(lemma_suite)),
        ("interlacing and step bound", Box::new(|| interlacing(&corpus))),
        ("tree inertia", Box::new(tree_inertia)),
        ("shared-edge cycle witness", Box::new(theta_witness)),
        ("cross-path consistency", Box::new(|| cross_path(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
