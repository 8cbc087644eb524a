//! Spanning-forest expansion of the net Laplacian characteristic polynomial.
//!
//! For a signed graph on `n` vertices,
//!
//! ```text
//! c_k = (-1)^(n-k) · Σ_F a(F) σ(F)
//! ```
//!
//! summed over spanning forests `F` with exactly `k` components, where `a(F)`
//! is the product of the component orders and `σ(F)` the product of the edge
//! signs. Isolated vertices are singleton components. Everything here is brute
//! force and independent of the linear-algebra path in [`crate::exactalg`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{input, Error, Result};
use crate::exactalg::CharPoly;
use crate::graph::{EdgeRef, Sign, SignedGraph};
use crate::structure;

/// Largest order enumerated unless a caller raises it.
pub const DEFAULT_CAP: usize = 12;

/// One spanning forest with `k` components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    pub edges: Vec<EdgeRef>,
    /// Component orders, listed by smallest member vertex.
    pub component_sizes: Vec<usize>,
    pub sign: Sign,
}

impl SpanningForest {
    /// `a(F)`: the product of component orders.
    pub fn weight(&self) -> u64 {
        self.component_sizes.iter().map(|&s| s as u64).product()
    }

    pub fn components(&self) -> usize {
        self.component_sizes.len()
    }
}

/// Union-find with size tracking and an undo log; no path compression so
/// every union can be rolled back.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false (and nothing logged) if that
    /// would close a cycle.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.log.push((ra, rb));
        true
    }

    fn rollback(&mut self) {
        if let Some((ra, rb)) = self.log.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }

    /// Product of the class sizes.
    fn weight(&self) -> u64 {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v)
            .map(|v| self.size[v] as u64)
            .product()
    }

    fn sizes_by_min_vertex(&self) -> Vec<usize> {
        let n = self.parent.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if !seen[r] {
                seen[r] = true;
                out.push(self.size[r]);
            }
        }
        out
    }
}

fn check_cap(g: &SignedGraph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    Ok(())
}

/// Streams the spanning `k`-component forests of `g` in lexicographic order
/// of their sorted edge-index tuples.
pub fn spanning_k_forests(g: &SignedGraph, k: usize, cap: usize) -> Result<SpanningForests<'_>> {
    check_cap(g, cap)?;
    if k > g.n() {
        return input(format!("k = {k} exceeds the vertex count {}", g.n()));
    }
    Ok(SpanningForests {
        g,
        target: g.n() - k,
        chosen: Vec::new(),
        dsu: RollbackDsu::new(g.n()),
        next_start: 0,
        done: false,
    })
}

/// Iterator returned by [`spanning_k_forests`].
pub struct SpanningForests<'a> {
    g: &'a SignedGraph,
    target: usize,
    chosen: Vec<usize>,
    dsu: RollbackDsu,
    next_start: usize,
    done: bool,
}

impl SpanningForests<'_> {
    fn backtrack(&mut self) {
        match self.chosen.pop() {
            Some(last) => {
                self.dsu.rollback();
                self.next_start = last + 1;
            }
            None => self.done = true,
        }
    }

    fn current(&self) -> SpanningForest {
        let sign = self.chosen.iter().fold(Sign::Pos, |acc, &i| acc * self.g.edges()[i].sign);
        SpanningForest {
            edges: self.chosen.iter().map(|&i| EdgeRef(i)).collect(),
            component_sizes: self.dsu.sizes_by_min_vertex(),
            sign,
        }
    }
}

impl Iterator for SpanningForests<'_> {
    type Item = SpanningForest;

    fn next(&mut self) -> Option<SpanningForest> {
        let edges = self.g.edges();
        let m = edges.len();
        while !self.done {
            if self.chosen.len() == self.target {
                let forest = self.current();
                self.backtrack();
                return Some(forest);
            }
            let need = self.target - self.chosen.len();
            let mut extended = false;
            let mut i = self.next_start;
            while i + need <= m {
                if self.dsu.union(edges[i].u, edges[i].v) {
                    self.chosen.push(i);
                    self.next_start = i + 1;
                    extended = true;
                    break;
                }
                i += 1;
            }
            if !extended {
                self.backtrack();
            }
        }
        None
    }
}

/// Visits every acyclic edge subset once, passing its size, sign and weight.
fn visit_all_forests(g: &SignedGraph, mut visit: impl FnMut(usize, Sign, u64)) {
    fn rec(
        edges: &[crate::graph::Edge],
        start: usize,
        depth: usize,
        sign: Sign,
        dsu: &mut RollbackDsu,
        visit: &mut impl FnMut(usize, Sign, u64),
    ) {
        visit(depth, sign, dsu.weight());
        for i in start..edges.len() {
            if dsu.union(edges[i].u, edges[i].v) {
                rec(edges, i + 1, depth + 1, sign * edges[i].sign, dsu, visit);
                dsu.rollback();
            }
        }
    }
    let mut dsu = RollbackDsu::new(g.n());
    rec(g.edges(), 0, 0, Sign::Pos, &mut dsu, &mut visit);
}

fn alternating(n: usize, k: usize, sum: i128) -> BigInt {
    let v = BigInt::from(sum);
    if (n - k) % 2 == 1 {
        -v
    } else {
        v
    }
}

// i128 accumulators: forest counts times weights stay far below 2^127 at any
// order small enough to enumerate.

/// `c_k` from the forest sum. `k = 0` is allowed and is `0` for `n >= 1`.
pub fn coefficient_via_forests(g: &SignedGraph, k: usize, cap: usize) -> Result<BigInt> {
    let n = g.n();
    let mut sum: i128 = 0;
    for f in spanning_k_forests(g, k, cap)? {
        sum += f.sign.value() as i128 * f.weight() as i128;
    }
    Ok(alternating(n, k, sum))
}

/// Every coefficient `c_0..c_n` from a single enumeration of all forests.
pub fn char_poly_via_forests(g: &SignedGraph, cap: usize) -> Result<CharPoly> {
    check_cap(g, cap)?;
    let n = g.n();
    // indexed by edge count; a forest with j edges has n - j components
    let mut sums = vec![0i128; n + 1];
    visit_all_forests(g, |depth, sign, weight| {
        sums[depth] += sign.value() as i128 * weight as i128;
    });
    let coeffs = (0..=n).map(|k| alternating(n, k, sums[n - k])).collect();
    Ok(CharPoly::new(coeffs))
}

/// `c₁` through the spanning-tree sign sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSignSum {
    /// `Σ σ(T)` over spanning trees.
    pub sign_sum: BigInt,
    /// `(−1)^(n−1) · n · sign_sum`.
    pub c1: BigInt,
    /// False when the graph has no spanning tree; both values are then 0.
    pub connected: bool,
}

impl TreeSignSum {
    /// For connected graphs, nullity is one exactly when this holds.
    pub fn c1_nonzero(&self) -> bool {
        !self.c1.is_zero()
    }
}

pub fn c1_tree_sum(g: &SignedGraph, cap: usize) -> Result<TreeSignSum> {
    check_cap(g, cap)?;
    let n = g.n();
    if n == 0 || !structure::is_connected(g) {
        return Ok(TreeSignSum { sign_sum: BigInt::zero(), c1: BigInt::zero(), connected: false });
    }
    let sign_sum: i128 = spanning_k_forests(g, 1, cap)?.map(|t| t.sign.value() as i128).sum();
    let sign_sum = BigInt::from(sign_sum);
    let c1 = alternating(n, 1, 1) * BigInt::from(n) * &sign_sum;
    Ok(TreeSignSum { sign_sum, c1, connected: true })
}

/// Number of spanning trees (unsigned), from the same enumeration.
pub fn spanning_tree_count(g: &SignedGraph, cap: usize) -> Result<u64> {
    Ok(spanning_k_forests(g, 1, cap)?.count() as u64)
}
