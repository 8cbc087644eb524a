//! Executable nullity statements for net Laplacians.
//!
//! Formulas become predictions, inequalities become verifiers and
//! characterizations become classifiers. Each check yields a [`CheckResult`];
//! a check whose precondition fails is reported as inapplicable, never as a
//! failure. All nullity comparisons use exact integer arithmetic; only the
//! interlacing check and one leg of the cross-path check touch floats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{self, char_poly, eigenvalues_float, float_zero_count, inertia, rank_exact};
use crate::forests;
use crate::graph::{EdgeRef, SignedGraph};
use crate::structure::{self, cactus_cycles, component_graphs, connected_components, cut_edges, cut_vertices};

/// Absolute slack for float eigenvalue comparisons in the interlacing check.
pub const INTERLACING_TOL: f64 = 1e-7;

pub mod names {
    pub const NULLITY_PATHS_AGREE: &str = "nullity_paths_agree";
    pub const NEGATION_INVARIANCE: &str = "negation_invariance";
    pub const EDGELESS_IFF_FULL_NULLITY: &str = "edgeless_iff_full_nullity";
    pub const COMPONENT_ADDITIVITY: &str = "component_additivity";
    pub const NULLITY_BOUNDS: &str = "nullity_bounds";
    pub const MAX_NULLITY_CLASSIFICATION: &str = "max_nullity_classification";
    pub const CACTUS_PREDICTION: &str = "cactus_prediction";
    pub const TREE_NULLITY: &str = "tree_nullity";
    pub const TREE_INERTIA: &str = "tree_inertia";
    pub const UNICYCLIC_NULLITY: &str = "unicyclic_nullity";
    pub const C1_CRITERION: &str = "c1_criterion";
    pub const FOREST_COEFFICIENTS: &str = "forest_coefficients";
    pub const EDGE_INTERLACING: &str = "edge_interlacing";
    pub const EDGE_NULLITY_STEP: &str = "edge_nullity_step";
    pub const CUT_EDGE_INEQUALITY: &str = "cut_edge_inequality";
    pub const COALESCENCE: &str = "coalescence";
    pub const CUT_VERTEX_COALESCENCE: &str = "cut_vertex_coalescence";
    pub const PENDANT_PRUNING: &str = "pendant_pruning";
    pub const CYCLE_EDGE_DELETION: &str = "cycle_edge_deletion";
    pub const EXPECTED_NULLITY: &str = "expected_nullity";
}

/// Outcome of one check on one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub applicable: bool,
    /// Meaningful only when `applicable`.
    pub passed: bool,
    /// The failing values, or the unmet precondition when inapplicable.
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass(name: &str) -> Self {
        CheckResult { name: name.to_owned(), applicable: true, passed: true, witness: None }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        CheckResult { name: name.to_owned(), applicable: true, passed: false, witness: Some(witness.into()) }
    }

    pub fn skip(name: &str, reason: impl Into<String>) -> Self {
        CheckResult { name: name.to_owned(), applicable: false, passed: false, witness: Some(reason.into()) }
    }

    fn check(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn failed(&self) -> bool {
        self.applicable && !self.passed
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    /// True when no applicable check failed.
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(CheckResult::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names of checks that ran (were applicable) at least once.
    pub fn executed_kinds(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.checks.iter().filter(|c| c.applicable).map(|c| c.name.as_str()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Collapses to one entry per check name, sorted by name. An entry is
    /// applicable if any instance was, and passes if every applicable
    /// instance passed; the witness is the first failure's.
    pub fn summarize(&self) -> VerificationReport {
        let mut by_name: BTreeMap<&str, CheckResult> = BTreeMap::new();
        for c in &self.checks {
            let slot = by_name.entry(&c.name).or_insert_with(|| c.clone());
            if std::ptr::eq(slot as *const _, c) {
                continue;
            }
            match (slot.applicable, c.applicable) {
                (false, true) => *slot = c.clone(),
                (true, true) if slot.passed && !c.passed => *slot = c.clone(),
                _ => {}
            }
        }
        VerificationReport { checks: by_name.into_values().collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Values computed once per graph and shared by the checks.
pub(crate) struct Facts<'a> {
    pub g: &'a SignedGraph,
    pub nullity: usize,
    pub components: Vec<Vec<usize>>,
}

impl<'a> Facts<'a> {
    pub fn new(g: &'a SignedGraph) -> Self {
        Facts { g, nullity: exactalg::nullity(g), components: connected_components(g) }
    }

    pub fn connected(&self) -> bool {
        self.components.len() == 1
    }

    /// `|E| − |V| + c`; the cyclomatic number when connected.
    pub fn beta(&self) -> usize {
        self.g.edge_count() + self.components.len() - self.g.n()
    }
}

fn not_connected(g: &SignedGraph) -> Error {
    Error::Inapplicable(format!("graph is not connected: {g}"))
}

/// `(1, min(β + 1, n − 1))` for a connected graph with `n ≥ 2`.
pub fn nullity_bounds(g: &SignedGraph) -> Result<(usize, usize)> {
    if g.n() < 2 {
        return Err(Error::Inapplicable(format!("bounds need n >= 2, got n = {}", g.n())));
    }
    let beta = structure::cyclomatic_number(g).map_err(|_| not_connected(g))?;
    Ok((1, (beta + 1).min(g.n() - 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CactusRegime {
    /// No cycles: a tree.
    Acyclic,
    /// Every cycle has `m⁺ ≠ m⁻`; nullity 1.
    AllUnbalanced,
    /// Every cycle has `m⁺ = m⁻`; nullity `β + 1`.
    AllBalanced,
    /// Both kinds present; nullity `1 + #balanced`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CactusPrediction {
    pub predicted_nullity: usize,
    pub balanced_cycle_count: usize,
    pub cycle_count: usize,
    pub regime: CactusRegime,
}

/// `η = 1 + #{cycles with m⁺ = m⁻}` for a connected cactus.
///
/// Each cycle block contributes its own nullity (2 when balanced-count, 1
/// otherwise), bridges contribute trees of nullity 1, and every coalescence
/// at a cut vertex subtracts one, which telescopes to the formula above.
pub fn predict_cactus_nullity(g: &SignedGraph) -> Result<CactusPrediction> {
    if !structure::is_connected(g) {
        return Err(not_connected(g));
    }
    let cycles = cactus_cycles(g)?;
    let balanced = cycles.iter().filter(|c| c.is_balanced_count()).count();
    let regime = match (cycles.len(), balanced) {
        (0, _) => CactusRegime::Acyclic,
        (_, 0) => CactusRegime::AllUnbalanced,
        (c, b) if b == c => CactusRegime::AllBalanced,
        _ => CactusRegime::Mixed,
    };
    Ok(CactusPrediction {
        predicted_nullity: 1 + balanced,
        balanced_cycle_count: balanced,
        cycle_count: cycles.len(),
        regime,
    })
}

/// Result of the maximum-nullity classifier, by two independent routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxNullityVerdict {
    /// `g` is `K_{n/2} ▽⁻ K_{n/2}` or its negation up to relabelling.
    pub structural: bool,
    /// `rank L±(g) = 1`, i.e. `η = n − 1`.
    pub rank_one: bool,
    pub witness: String,
}

impl MaxNullityVerdict {
    pub fn is_extremal(&self) -> bool {
        self.structural
    }

    pub fn routes_agree(&self) -> bool {
        self.structural == self.rank_one
    }
}

/// Structural test: complete, every net-degree equal to a common `s = ±1`,
/// and after negating when `s = +1` the positive edges form two disjoint
/// cliques of order `n/2` with every cross edge negative.
fn complete_join_shape(g: &SignedGraph) -> std::result::Result<String, String> {
    let n = g.n();
    if n < 2 || n % 2 == 1 {
        return Err(format!("order {n} is not even"));
    }
    if g.edge_count() != n * (n - 1) / 2 {
        return Err(format!("not complete: {} of {} edges", g.edge_count(), n * (n - 1) / 2));
    }
    let degrees: Vec<i64> = (0..n).map(|v| g.net_degree(v).expect("in range")).collect();
    let s = degrees[0];
    if s.abs() != 1 || degrees.iter().any(|&d| d != s) {
        return Err(format!("net-degrees {degrees:?} are not all +1 or all -1"));
    }
    let h = if s == 1 { g.negate() } else { g.clone() };
    let positive = SignedGraph::from_edges(n, h.edges().iter().copied().filter(|e| e.sign.is_positive()).collect())
        .expect("subset of a valid edge list");
    let parts = connected_components(&positive);
    if parts.len() != 2 || parts[0].len() != n / 2 {
        return Err(format!("positive part splits as {parts:?}"));
    }
    let side: Vec<bool> = (0..n).map(|v| parts[0].binary_search(&v).is_ok()).collect();
    if let Some(e) = h.edges().iter().find(|e| e.sign.is_positive() != (side[e.u] == side[e.v])) {
        return Err(format!("edge ({}, {}) breaks the clique pattern", e.u, e.v));
    }
    let which = if s == 1 { "negated join" } else { "join" };
    Ok(format!("{which} with cliques {:?} | {:?}", parts[0], parts[1]))
}

pub fn classify_max_nullity(g: &SignedGraph) -> Result<MaxNullityVerdict> {
    if g.n() < 2 {
        return Err(Error::Inapplicable(format!("classification needs n >= 2, got n = {}", g.n())));
    }
    if !structure::is_connected(g) {
        return Err(not_connected(g));
    }
    let rank_one = rank_exact(&g.net_laplacian()) == 1;
    let (structural, witness) = match complete_join_shape(g) {
        Ok(w) => (true, w),
        Err(w) => (false, w),
    };
    Ok(MaxNullityVerdict { structural, rank_one, witness })
}

/// Edge interlacing between `Γ` and `H = Γ − e`.
///
/// For a positive edge `λᵢ(Γ) ≥ λᵢ(H) ≥ λᵢ₊₁(Γ)`; for a negative edge the
/// roles of `Γ` and `H` swap. Comparisons allow [`INTERLACING_TOL`].
pub fn verify_interlacing(g: &SignedGraph, e: EdgeRef) -> Result<CheckResult> {
    let edge = g.edge(e)?;
    let h = g.delete_edge(e)?;
    let spec_g = eigenvalues_float(&g.net_laplacian())?;
    let spec_h = eigenvalues_float(&h.net_laplacian())?;
    let (upper, lower) = if edge.sign.is_positive() { (&spec_g, &spec_h) } else { (&spec_h, &spec_g) };
    let n = g.n();
    for i in 0..n {
        if upper[i] < lower[i] - INTERLACING_TOL {
            return Ok(CheckResult::fail(
                names::EDGE_INTERLACING,
                format!("edge {e:?} of {g}: step {i}: {} < {} ({upper:?} vs {lower:?})", upper[i], lower[i]),
            ));
        }
        if i + 1 < n && lower[i] < upper[i + 1] - INTERLACING_TOL {
            return Ok(CheckResult::fail(
                names::EDGE_INTERLACING,
                format!("edge {e:?} of {g}: step {i}: {} < {} ({upper:?} vs {lower:?})", lower[i], upper[i + 1]),
            ));
        }
    }
    Ok(CheckResult::pass(names::EDGE_INTERLACING))
}

fn edge_step(g: &SignedGraph, eta: usize, e: EdgeRef) -> Result<CheckResult> {
    let after = exactalg::nullity(&g.delete_edge(e)?);
    Ok(CheckResult::check(names::EDGE_NULLITY_STEP, after + 1 >= eta && after <= eta + 1, || {
        format!("deleting edge {e:?} of {g} moves nullity {eta} -> {after}")
    }))
}

/// `η(Γ) − 1 ≤ η(Γ − e) ≤ η(Γ) + 1`.
pub fn verify_edge_nullity_step(g: &SignedGraph, e: EdgeRef) -> Result<CheckResult> {
    edge_step(g, exactalg::nullity(g), e)
}

fn cut_edge_inequality(g: &SignedGraph, eta: usize, e: EdgeRef) -> Result<CheckResult> {
    let edge = g.edge(e)?;
    let h = g.delete_edge(e)?;
    let comps = connected_components(&h);
    let side = comps.iter().find(|c| c.binary_search(&edge.u).is_ok()).expect("u lies in some component");
    if side.binary_search(&edge.v).is_ok() {
        return Ok(CheckResult::skip(names::CUT_EDGE_INEQUALITY, format!("edge {e:?} is not a cut edge of {g}")));
    }
    let rest: Vec<usize> = (0..g.n()).filter(|v| side.binary_search(v).is_err()).collect();
    let (g1, _) = h.induced_subgraph(side)?;
    let (g2, _) = h.induced_subgraph(&rest)?;
    let (n1, n2) = (exactalg::nullity(&g1), exactalg::nullity(&g2));
    Ok(CheckResult::check(names::CUT_EDGE_INEQUALITY, eta + 1 >= n1 + n2, || {
        format!("cut edge {e:?} of {g}: nullity {eta} < {n1} + {n2} - 1")
    }))
}

/// `η(Γ) ≥ η(Γ₁) + η(Γ₂) − 1` where `Γ − e = Γ₁ ∪ Γ₂` for a cut edge `e`.
pub fn verify_cut_edge_inequality(g: &SignedGraph, e: EdgeRef) -> Result<CheckResult> {
    cut_edge_inequality(g, exactalg::nullity(g), e)
}

/// `η(Γ₁·Γ₂) = η(Γ₁) + η(Γ₂) − 1` for connected parts.
pub fn verify_coalescence(g1: &SignedGraph, u: usize, g2: &SignedGraph, v: usize) -> Result<CheckResult> {
    if !structure::is_connected(g1) || !structure::is_connected(g2) {
        return Ok(CheckResult::skip(names::COALESCENCE, "both parts must be connected"));
    }
    let joined = g1.coalesce(u, g2, v)?;
    let (a, b, c) = (exactalg::nullity(g1), exactalg::nullity(g2), exactalg::nullity(&joined));
    Ok(CheckResult::check(names::COALESCENCE, c + 1 == a + b, || {
        format!("{g1} at {u} joined with {g2} at {v}: nullity {c} != {a} + {b} - 1")
    }))
}

/// Splits a connected graph at each cut vertex `w` into `Γ₁ = Γ[C ∪ {w}]` and
/// `Γ₂ = Γ − C` for the first component `C` of `Γ − w`, and checks the
/// coalescence identity.
fn cut_vertex_splits(f: &Facts) -> Result<CheckResult> {
    let g = f.g;
    if !f.connected() {
        return Ok(CheckResult::skip(names::CUT_VERTEX_COALESCENCE, "graph is not connected"));
    }
    let cuts = cut_vertices(g);
    if cuts.is_empty() {
        return Ok(CheckResult::skip(names::CUT_VERTEX_COALESCENCE, "no cut vertex"));
    }
    for w in cuts {
        let others: Vec<usize> = (0..g.n()).filter(|&v| v != w).collect();
        let (minus_w, map) = g.induced_subgraph(&others)?;
        let first = &connected_components(&minus_w)[0];
        let mut side: Vec<usize> = first.iter().map(|&i| map[i]).collect();
        let rest: Vec<usize> = (0..g.n()).filter(|v| side.binary_search(v).is_err()).collect();
        side.push(w);
        let (g1, _) = g.induced_subgraph(&side)?;
        let (g2, _) = g.induced_subgraph(&rest)?;
        let (a, b) = (exactalg::nullity(&g1), exactalg::nullity(&g2));
        if f.nullity + 1 != a + b {
            return Ok(CheckResult::fail(
                names::CUT_VERTEX_COALESCENCE,
                format!("{g} split at {w} into {g1} and {g2}: nullity {} != {a} + {b} - 1", f.nullity),
            ));
        }
    }
    Ok(CheckResult::pass(names::CUT_VERTEX_COALESCENCE))
}

/// Inertia of a signed tree is `(m⁺, m⁻, 1)`.
pub fn verify_tree_inertia(t: &SignedGraph) -> Result<CheckResult> {
    if !structure::is_connected(t) || t.edge_count() + 1 != t.n() {
        return Ok(CheckResult::skip(names::TREE_INERTIA, "not a tree"));
    }
    let got = inertia(&t.net_laplacian())?;
    let (mp, mm) = t.sign_counts();
    Ok(CheckResult::check(names::TREE_INERTIA, got.as_triple() == (mp, mm, 1), || {
        format!("tree {t}: inertia {got}, expected ({mp}, {mm}, 1)")
    }))
}

/// Options for [`verify_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest order for which the forest-sum checks run.
    pub forest_cap: usize,
    /// Run the float-based checks (interlacing, float leg of the cross-path check).
    pub float_checks: bool,
    pub expected_nullity: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { forest_cap: 10, float_checks: true, expected_nullity: None }
    }
}

fn nullity_paths(f: &Facts, float_checks: bool) -> Result<CheckResult> {
    let g = f.g;
    let l = g.net_laplacian();
    let cp = char_poly(&l);
    let inert = inertia(&l)?;
    let by_rank = g.n() - rank_exact(&l);
    let by_poly = cp.trailing_zeros();
    let trace_ok = g.n() == 0 || *cp.coeff(g.n() - 1) == -l.trace();
    let mut ok = cp.is_monic() && trace_ok && by_rank == f.nullity && by_poly == by_rank && inert.zero == by_rank;
    let mut by_float = None;
    if float_checks {
        let ev = eigenvalues_float(&l)?;
        let z = float_zero_count(&l, &ev);
        ok &= z == by_rank;
        by_float = Some(z);
    }
    Ok(CheckResult::check(names::NULLITY_PATHS_AGREE, ok, || {
        format!("{g}: rank route {by_rank}, char poly {cp} ({by_poly} zero roots), inertia {inert}, float zeros {by_float:?}")
    }))
}

fn component_additivity(f: &Facts) -> CheckResult {
    if f.components.len() < 2 {
        return CheckResult::skip(names::COMPONENT_ADDITIVITY, "graph is connected");
    }
    let parts: Vec<usize> = component_graphs(f.g).iter().map(|(c, _)| exactalg::nullity(c)).collect();
    let total: usize = parts.iter().sum();
    CheckResult::check(names::COMPONENT_ADDITIVITY, total == f.nullity, || {
        format!("{}: nullity {} but components give {parts:?}", f.g, f.nullity)
    })
}

fn edgeless_iff_full(f: &Facts) -> CheckResult {
    let edgeless = f.g.edge_count() == 0;
    CheckResult::check(names::EDGELESS_IFF_FULL_NULLITY, edgeless == (f.nullity == f.g.n()), || {
        format!("{}: nullity {} with {} edges", f.g, f.nullity, f.g.edge_count())
    })
}

fn bounds(f: &Facts) -> CheckResult {
    match nullity_bounds(f.g) {
        Ok((lo, hi)) => CheckResult::check(names::NULLITY_BOUNDS, lo <= f.nullity && f.nullity <= hi, || {
            format!("{}: nullity {} outside [{lo}, {hi}]", f.g, f.nullity)
        }),
        Err(e) => CheckResult::skip(names::NULLITY_BOUNDS, e.to_string()),
    }
}

fn max_nullity(f: &Facts) -> CheckResult {
    if f.g.n() < 2 || !f.connected() {
        return CheckResult::skip(names::MAX_NULLITY_CLASSIFICATION, "needs a connected graph with n >= 2");
    }
    let structural = complete_join_shape(f.g);
    let extremal = f.nullity == f.g.n() - 1;
    CheckResult::check(names::MAX_NULLITY_CLASSIFICATION, structural.is_ok() == extremal, || {
        format!("{}: nullity {}, structural test says {structural:?}", f.g, f.nullity)
    })
}

fn cactus_prediction(f: &Facts) -> CheckResult {
    if !f.connected() {
        return CheckResult::skip(names::CACTUS_PREDICTION, "graph is not connected");
    }
    match predict_cactus_nullity(f.g) {
        Ok(p) => CheckResult::check(names::CACTUS_PREDICTION, p.predicted_nullity == f.nullity, || {
            format!("{}: predicted {} ({:?}), exact {}", f.g, p.predicted_nullity, p.regime, f.nullity)
        }),
        Err(e) => CheckResult::skip(names::CACTUS_PREDICTION, e.to_string()),
    }
}

fn tree_nullity(f: &Facts) -> CheckResult {
    if !f.connected() || f.beta() != 0 {
        return CheckResult::skip(names::TREE_NULLITY, "not a tree");
    }
    CheckResult::check(names::TREE_NULLITY, f.nullity == 1, || format!("tree {} has nullity {}", f.g, f.nullity))
}

fn unicyclic(f: &Facts) -> Result<CheckResult> {
    if !f.connected() || f.beta() != 1 {
        return Ok(CheckResult::skip(names::UNICYCLIC_NULLITY, "not unicyclic"));
    }
    let cycle = &cactus_cycles(f.g)?[0];
    let want = if cycle.is_balanced_count() { 2 } else { 1 };
    Ok(CheckResult::check(names::UNICYCLIC_NULLITY, f.nullity == want, || {
        format!("{}: cycle ({}, {}) predicts {want}, exact {}", f.g, cycle.m_plus, cycle.m_minus, f.nullity)
    }))
}

fn c1_criterion(f: &Facts, cap: usize) -> Result<CheckResult> {
    if !f.connected() || f.g.n() > cap {
        return Ok(CheckResult::skip(names::C1_CRITERION, format!("needs a connected graph with n <= {cap}")));
    }
    let sum = forests::c1_tree_sum(f.g, cap)?;
    Ok(CheckResult::check(names::C1_CRITERION, (f.nullity == 1) == sum.c1_nonzero(), || {
        format!("{}: nullity {} but c1 = {}", f.g, f.nullity, sum.c1)
    }))
}

fn forest_coefficients(f: &Facts, cap: usize) -> Result<CheckResult> {
    if f.g.n() > cap {
        return Ok(CheckResult::skip(names::FOREST_COEFFICIENTS, format!("n = {} above forest cap {cap}", f.g.n())));
    }
    let by_forests = forests::char_poly_via_forests(f.g, cap)?;
    let by_algebra = char_poly(&f.g.net_laplacian());
    Ok(CheckResult::check(names::FOREST_COEFFICIENTS, by_forests == by_algebra, || {
        format!("{}: forests give {by_forests}, Berkowitz gives {by_algebra}", f.g)
    }))
}

fn first_failure(name: &str, results: impl IntoIterator<Item = Result<CheckResult>>) -> Result<CheckResult> {
    let mut any = false;
    for r in results {
        let r = r?;
        if r.failed() {
            return Ok(r);
        }
        any |= r.applicable;
    }
    Ok(if any { CheckResult::pass(name) } else { CheckResult::skip(name, "no applicable instance") })
}

fn pruning(f: &Facts) -> Result<CheckResult> {
    if !f.connected() {
        return Ok(CheckResult::skip(names::PENDANT_PRUNING, "graph is not connected"));
    }
    let (core, _) = structure::prune_pendant_trees(f.g)?;
    let after = exactalg::nullity(&core);
    Ok(CheckResult::check(names::PENDANT_PRUNING, after == f.nullity, || {
        format!("{}: nullity {} but pruned {core} has {after}", f.g, f.nullity)
    }))
}

/// On a cactus whose cycles are all balanced-count (all unbalanced), deleting
/// a cycle edge lowers the nullity by one (keeps it at one).
fn cycle_edge_deletion(f: &Facts) -> Result<CheckResult> {
    let skip = |why: &str| Ok(CheckResult::skip(names::CYCLE_EDGE_DELETION, why));
    if !f.connected() {
        return skip("graph is not connected");
    }
    let Ok(cycles) = cactus_cycles(f.g) else {
        return skip("not a cactus");
    };
    if cycles.is_empty() {
        return skip("no cycles");
    }
    let balanced = cycles.iter().filter(|c| c.is_balanced_count()).count();
    let want = if balanced == cycles.len() {
        f.nullity - 1
    } else if balanced == 0 {
        if f.nullity != 1 {
            return Ok(CheckResult::fail(names::CYCLE_EDGE_DELETION, format!("{}: all cycles unbalanced, nullity {}", f.g, f.nullity)));
        }
        1
    } else {
        return skip("mixed cycle profile");
    };
    for c in &cycles {
        for &e in &c.edges {
            let after = exactalg::nullity(&f.g.delete_edge(e)?);
            if after != want {
                return Ok(CheckResult::fail(
                    names::CYCLE_EDGE_DELETION,
                    format!("{}: deleting cycle edge {e:?} gives nullity {after}, expected {want}", f.g),
                ));
            }
        }
    }
    Ok(CheckResult::pass(names::CYCLE_EDGE_DELETION))
}

/// Every applicable check on one graph.
pub fn verify_all(g: &SignedGraph, opts: &VerifyOptions) -> Result<VerificationReport> {
    let f = Facts::new(g);
    let mut r = VerificationReport::default();
    r.push(nullity_paths(&f, opts.float_checks)?);
    let neg = exactalg::nullity(&g.negate());
    r.push(CheckResult::check(names::NEGATION_INVARIANCE, neg == f.nullity, || {
        format!("{g}: nullity {} but negation has {neg}", f.nullity)
    }));
    r.push(edgeless_iff_full(&f));
    r.push(component_additivity(&f));
    r.push(bounds(&f));
    r.push(max_nullity(&f));
    r.push(cactus_prediction(&f));
    r.push(tree_nullity(&f));
    r.push(verify_tree_inertia(g)?);
    r.push(unicyclic(&f)?);
    r.push(c1_criterion(&f, opts.forest_cap)?);
    r.push(forest_coefficients(&f, opts.forest_cap)?);
    if opts.float_checks {
        r.push(first_failure(names::EDGE_INTERLACING, g.edge_refs().map(|e| verify_interlacing(g, e)))?);
    } else {
        r.push(CheckResult::skip(names::EDGE_INTERLACING, "float checks disabled"));
    }
    r.push(first_failure(names::EDGE_NULLITY_STEP, g.edge_refs().map(|e| edge_step(g, f.nullity, e)))?);
    r.push(first_failure(names::CUT_EDGE_INEQUALITY, cut_edges(g).into_iter().map(|e| cut_edge_inequality(g, f.nullity, e)))?);
    r.push(cut_vertex_splits(&f)?);
    r.push(pruning(&f)?);
    r.push(cycle_edge_deletion(&f)?);
    if let Some(want) = opts.expected_nullity {
        r.push(CheckResult::check(names::EXPECTED_NULLITY, want == f.nullity, || {
            format!("{g}: expected nullity {want}, exact {}", f.nullity)
        }));
    }
    r.checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(r)
}

/// Checks cheap enough for exhaustive sweeps; each returns a failing
/// [`CheckResult`] on a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SweepCheck {
    Bounds,
    MaxNullity,
    Additivity,
    EdgeStep,
    CutEdge,
    CutVertex,
    Cactus,
    Negation,
    CrossPath,
}

impl SweepCheck {
    pub const DEFAULT: [SweepCheck; 8] = [
        SweepCheck::Bounds,
        SweepCheck::MaxNullity,
        SweepCheck::Additivity,
        SweepCheck::EdgeStep,
        SweepCheck::CutEdge,
        SweepCheck::CutVertex,
        SweepCheck::Cactus,
        SweepCheck::Negation,
    ];
}

pub(crate) fn run_sweep_check(check: SweepCheck, f: &Facts) -> Result<Vec<CheckResult>> {
    let g = f.g;
    Ok(match check {
        SweepCheck::Bounds => vec![bounds(f)],
        SweepCheck::MaxNullity => vec![max_nullity(f)],
        SweepCheck::Additivity => vec![component_additivity(f), edgeless_iff_full(f)],
        SweepCheck::EdgeStep => vec![first_failure(names::EDGE_NULLITY_STEP, g.edge_refs().map(|e| edge_step(g, f.nullity, e)))?],
        SweepCheck::CutEdge => vec![first_failure(
            names::CUT_EDGE_INEQUALITY,
            cut_edges(g).into_iter().map(|e| cut_edge_inequality(g, f.nullity, e)),
        )?],
        SweepCheck::CutVertex => vec![cut_vertex_splits(f)?],
        SweepCheck::Cactus => {
            if f.connected() && structure::is_cactus(g)? {
                vec![cactus_prediction(f)]
            } else {
                vec![CheckResult::skip(names::CACTUS_PREDICTION, "not a connected cactus")]
            }
        }
        SweepCheck::Negation => {
            let neg = exactalg::nullity(&g.negate());
            vec![CheckResult::check(names::NEGATION_INVARIANCE, neg == f.nullity, || {
                format!("{g}: nullity {} but negation has {neg}", f.nullity)
            })]
        }
        SweepCheck::CrossPath => vec![nullity_paths(f, false)?],
    })
}

/// Short human-readable description of a prediction, for reports.
pub fn describe_prediction(p: &CactusPrediction) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "{} of {} cycles balanced ({:?}), predicted nullity {}",
        p.balanced_cycle_count, p.cycle_count, p.regime, p.predicted_nullity
    );
    s
}
