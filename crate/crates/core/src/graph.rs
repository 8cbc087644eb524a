//! Signed simple graphs on dense vertex labels `0..n`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::matrix::IntMatrix;

/// Edge sign, encoded as the integer `-1` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Sign {
    Neg = -1,
    Pos = 1,
}

impl Sign {
    pub fn from_int(s: i64) -> Result<Self> {
        match s {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            other => input(format!("edge sign must be -1 or 1, got {other}")),
        }
    }

    #[inline]
    pub fn value(self) -> i64 {
        self as i8 as i64
    }

    #[inline]
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self == Sign::Pos
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// An undirected signed edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// Index into a graph's canonical (lexicographically sorted) edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeRef(pub usize);

/// A signed simple graph.
///
/// Edges are kept sorted lexicographically by `(u, v)` with `u < v`; loops,
/// repeated pairs and signs other than `±1` are rejected at construction.
/// Values are immutable: every operation returns a new graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples in any endpoint order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut out = Vec::new();
        for (a, b, s) in edges {
            let sign = Sign::from_int(s)?;
            if a >= n || b >= n {
                return input(format!("edge ({a}, {b}) out of range for n = {n}"));
            }
            if a == b {
                return input(format!("loop at vertex {a}"));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            out.push(Edge { u, v, sign });
        }
        Self::from_edges(n, out)
    }

    /// Builds a graph from already-oriented edges; sorts and validates them.
    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.u >= e.v || e.v >= n {
                return input(format!("edge ({}, {}) is not a valid pair for n = {n}", e.u, e.v));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return input(format!("repeated edge ({}, {})", w[0].u, w[0].v));
        }
        Ok(SignedGraph { n, edges })
    }

    /// Sorted, validated edges only; used by enumerators that build them in order.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        debug_assert!(edges.iter().all(|e| e.u < e.v && e.v < n));
        SignedGraph { n, edges }
    }

    pub fn edgeless(n: usize) -> Self {
        SignedGraph { n, edges: Vec::new() }
    }

    /// `K_k ▽⁻ K_k`: two all-positive `K_k` on `0..k` and `k..2k` with every
    /// cross pair joined by a negative edge.
    pub fn complete_join_neg(k: usize) -> Result<Self> {
        if k == 0 {
            return input("complete_join_neg needs k >= 1");
        }
        let n = 2 * k;
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let sign = if (u < k) == (v < k) { Sign::Pos } else { Sign::Neg };
                edges.push(Edge { u, v, sign });
            }
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// Path `0 - 1 - ... - (len)` with the given signs.
    pub fn path(signs: &[i64]) -> Result<Self> {
        Self::new(signs.len() + 1, signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)))
    }

    /// Cycle `0 - 1 - ... - (len-1) - 0`; `signs[i]` is the sign of the edge
    /// leaving vertex `i`.
    pub fn cycle(signs: &[i64]) -> Result<Self> {
        let len = signs.len();
        if len < 3 {
            return input(format!("a cycle needs at least 3 edges, got {len}"));
        }
        Self::new(len, signs.iter().enumerate().map(|(i, &s)| (i, (i + 1) % len, s)))
    }

    /// Star with center 0 and leaves `1..=signs.len()`.
    pub fn star(signs: &[i64]) -> Result<Self> {
        Self::new(signs.len() + 1, signs.iter().enumerate().map(|(i, &s)| (0, i + 1, s)))
    }

    /// Complete graph where every edge carries `sign`.
    pub fn complete(n: usize, sign: i64) -> Result<Self> {
        let sign = Sign::from_int(sign)?;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge { u, v, sign });
            }
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeRef) -> Result<Edge> {
        self.edges
            .get(e.0)
            .copied()
            .ok_or_else(|| Error::Input(format!("edge index {} out of range ({} edges)", e.0, self.edges.len())))
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        (0..self.edges.len()).map(EdgeRef)
    }

    /// Index of the edge joining `a` and `b`, if present.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<EdgeRef> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&key)).ok().map(EdgeRef)
    }

    /// Neighbour lists as `(neighbour, edge index)`, sorted by neighbour.
    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return input(format!("vertex {v} out of range for n = {}", self.n));
        }
        Ok(())
    }

    /// Number of positive neighbours minus number of negative neighbours.
    pub fn net_degree(&self, v: usize) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.sign.value())
            .sum())
    }

    fn net_degrees(&self) -> Vec<i64> {
        let mut d = vec![0i64; self.n];
        for e in &self.edges {
            d[e.u] += e.sign.value();
            d[e.v] += e.sign.value();
        }
        d
    }

    /// `(m⁺, m⁻)`: counts of positive and negative edges.
    pub fn sign_counts(&self) -> (usize, usize) {
        let pos = self.edges.iter().filter(|e| e.sign.is_positive()).count();
        (pos, self.edges.len() - pos)
    }

    /// Product of all edge signs.
    pub fn sign_product(&self) -> Sign {
        self.edges.iter().fold(Sign::Pos, |acc, e| acc * e.sign)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for e in &self.edges {
            let s = BigInt::from(e.sign.value());
            m.set(e.u, e.v, s.clone());
            m.set(e.v, e.u, s);
        }
        m
    }

    /// `L± = D± − A`.
    pub fn net_laplacian(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for (v, d) in self.net_degrees().into_iter().enumerate() {
            m.set(v, v, BigInt::from(d));
        }
        for e in &self.edges {
            let s = BigInt::from(-e.sign.value());
            m.set(e.u, e.v, s.clone());
            m.set(e.v, e.u, s);
        }
        m
    }

    /// Row-major net Laplacian in machine integers, for the fast exact paths.
    pub(crate) fn net_laplacian_i128(&self) -> Vec<i128> {
        let n = self.n;
        let mut m = vec![0i128; n * n];
        for e in &self.edges {
            let s = e.sign.value() as i128;
            m[e.u * n + e.u] += s;
            m[e.v * n + e.v] += s;
            m[e.u * n + e.v] = -s;
            m[e.v * n + e.u] = -s;
        }
        m
    }

    /// `−Γ`: every sign flipped.
    pub fn negate(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: e.sign.flip(), ..*e })
            .collect();
        SignedGraph { n: self.n, edges }
    }

    /// `Γ − e`, keeping the vertex set.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Self> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e.0);
        Ok(SignedGraph { n: self.n, edges })
    }

    /// `Γ − E₁` for a set of edge indices.
    pub fn delete_edges(&self, remove: &[EdgeRef]) -> Result<Self> {
        let mut drop = vec![false; self.edges.len()];
        for &e in remove {
            self.edge(e)?;
            drop[e.0] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| *e)
            .collect();
        Ok(SignedGraph { n: self.n, edges })
    }

    /// Returns `self` with the edge `(a, b, s)` added.
    pub fn add_edge(&self, a: usize, b: usize, s: i64) -> Result<Self> {
        let mut triples: Vec<_> = self.edges.iter().map(|e| (e.u, e.v, e.sign.value())).collect();
        triples.push((a, b, s));
        Self::new(self.n, triples)
    }

    /// `Γ[keep]`, relabelled to `0..|keep|` in increasing original order.
    ///
    /// The returned map sends new labels to original labels.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut label_map: Vec<usize> = keep.to_vec();
        label_map.sort_unstable();
        label_map.dedup();
        if let Some(&v) = label_map.last() {
            self.check_vertex(v)?;
        }
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in label_map.iter().enumerate() {
            new_label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_label[e.u] != usize::MAX && new_label[e.v] != usize::MAX)
            .map(|e| Edge { u: new_label[e.u], v: new_label[e.v], sign: e.sign })
            .collect();
        // relabelling is monotone, so lexicographic order survives
        Ok((Self::from_sorted_unchecked(label_map.len(), edges), label_map))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return input("permutation length differs from vertex count");
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return input("relabelling is not a permutation");
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                Edge { u: a.min(b), v: a.max(b), sign: e.sign }
            })
            .collect();
        Self::from_edges(self.n, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge { u: e.u + shift, v: e.v + shift, sign: e.sign }));
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    /// Coalescence `Γ₁·Γ₂`: identify vertex `u` of `self` with vertex `v` of
    /// `other`.
    ///
    /// Vertices of `self` keep their labels and the merged vertex is `u`; the
    /// remaining vertices of `other` follow as `self.n()..`, in order.
    pub fn coalesce(&self, u: usize, other: &SignedGraph, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + w,
                std::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut edges = self.edges.clone();
        for e in &other.edges {
            let (a, b) = (map(e.u), map(e.v));
            edges.push(Edge { u: a.min(b), v: a.max(b), sign: e.sign });
        }
        Self::from_edges(self.n + other.n - 1, edges)
    }

    /// Canonical JSON: `{"edges":[[u,v,s],...],"n":N}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed graph JSON: {e}")))
    }

    /// Graphviz rendering: positive edges solid, negative edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for e in &self.edges {
            let style = if e.sign.is_positive() { "solid" } else { "dashed" };
            let _ = writeln!(out, "  {} -- {} [style={style}];", e.u, e.v);
        }
        out.push_str("}\n");
        out
    }

    /// Sorted multiset of `(degree, net-degree)` pairs; invariant under relabelling.
    pub fn degree_profile(&self) -> Vec<(usize, i64)> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        let mut p: Vec<_> = deg.into_iter().zip(self.net_degrees()).collect();
        p.sort_unstable();
        p
    }

    /// Lexicographically least relabelling over all vertex permutations.
    ///
    /// Two graphs are isomorphic as signed graphs iff their canonical forms
    /// are equal. Brute force, so limited to `n <= 8`.
    pub fn canonical_form(&self) -> Result<Self> {
        if self.n > 8 {
            return Err(Error::CapExceeded { n: self.n, cap: 8 });
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Vec<Edge>> = None;
        loop {
            let mut edges: Vec<Edge> = self
                .edges
                .iter()
                .map(|e| {
                    let (a, b) = (perm[e.u], perm[e.v]);
                    Edge { u: a.min(b), v: a.max(b), sign: e.sign }
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(Self::from_sorted_unchecked(self.n, best.unwrap_or_default()))
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[derive(Serialize)]
struct GraphOut {
    edges: Vec<(usize, usize, i64)>,
    n: usize,
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphOut {
            edges: self.edges.iter().map(|e| (e.u, e.v, e.sign.value())).collect(),
            n: self.n,
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphIn {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphIn::deserialize(d)?;
        SignedGraph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// A graph file as accepted by `verify`: the canonical graph fields plus an
/// optional asserted nullity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub graph: SignedGraph,
    pub expected_nullity: Option<usize>,
}

impl Fixture {
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize, i64)>,
            #[serde(default)]
            expected_nullity: Option<usize>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed graph JSON: {e}")))?;
        Ok(Fixture { graph: SignedGraph::new(raw.n, raw.edges)?, expected_nullity: raw.expected_nullity })
    }
}
