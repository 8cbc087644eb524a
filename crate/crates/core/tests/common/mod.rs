//! Reference computations that share no code with the library: rational
//! Gaussian elimination, Faddeev-LeVerrier, BFS cycle tracing and nalgebra's
//! symmetric eigensolver.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use netlap::SignedGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Net Laplacian rows built straight from the edge list.
pub fn laplacian_rows(g: &SignedGraph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut m = vec![vec![0i64; n]; n];
    for e in g.edges() {
        let s = e.sign.value();
        m[e.u][e.v] -= s;
        m[e.v][e.u] -= s;
        m[e.u][e.u] += s;
        m[e.v][e.v] += s;
    }
    m
}

fn rational(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}

/// Rank over the rationals by textbook elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a = rational(rows);
    let n = a.len();
    let cols = if n == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..n {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let sub = &f * &a[rank][k];
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn oracle_nullity(g: &SignedGraph) -> usize {
    g.n() - rational_rank(&laplacian_rows(g))
}

/// Coefficients `c0..cn` of `det(xI − A)` by Faddeev-LeVerrier over the rationals.
pub fn leverrier(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let n = rows.len();
    let a = rational(rows);
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum()).collect()).collect()
    };
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am = mul(&a, &m);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    c.into_iter()
        .map(|x| {
            assert!(x.is_integer(), "characteristic coefficients are integers");
            x.to_integer()
        })
        .collect()
}

pub fn is_connected(g: &SignedGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    reach(g, 0, None).len() == n
}

/// Vertices reachable from `s`, optionally ignoring edge index `skip`.
pub fn reach(g: &SignedGraph, s: usize, skip: Option<usize>) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([s]);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for (i, e) in g.edges().iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let y = if e.u == x { e.v } else if e.v == x { e.u } else { continue };
            if seen.insert(y) {
                q.push_back(y);
            }
        }
    }
    seen
}

fn path_edges(g: &SignedGraph, s: usize, t: usize, skip: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        if x == t {
            let mut out = Vec::new();
            let mut cur = t;
            while let Some((p, e)) = prev[cur] {
                out.push(e);
                cur = p;
            }
            return Some(out);
        }
        for (i, e) in g.edges().iter().enumerate() {
            if i == skip {
                continue;
            }
            let y = if e.u == x { e.v } else if e.v == x { e.u } else { continue };
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, i));
                q.push_back(y);
            }
        }
    }
    None
}

/// Edge indices of every cycle of a cactus: each non-bridge edge closes the
/// shortest path between its ends, which in a cactus is its own cycle.
pub fn cactus_cycle_edges(g: &SignedGraph) -> Vec<Vec<usize>> {
    let mut cycles: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, e) in g.edges().iter().enumerate() {
        if let Some(mut p) = path_edges(g, e.u, e.v, i) {
            p.push(i);
            p.sort_unstable();
            cycles.insert(p);
        }
    }
    cycles.into_iter().collect()
}

/// `(m⁺, m⁻)` of every cycle of a cactus.
pub fn cactus_cycle_counts(g: &SignedGraph) -> Vec<(usize, usize)> {
    cactus_cycle_edges(g)
        .into_iter()
        .map(|c| {
            let neg = c.iter().filter(|&&i| g.edges()[i].sign.value() < 0).count();
            (c.len() - neg, neg)
        })
        .collect()
}

/// Eigenvalues of the net Laplacian from nalgebra, non-increasing.
pub fn reference_spectrum(g: &SignedGraph) -> Vec<f64> {
    let n = g.n();
    let rows = laplacian_rows(g);
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| rows[i][j] as f64);
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Decodes pair states with the first pair as the least significant base-3 digit.
pub fn decode(n: usize, mut code: u64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match code % 3 {
                1 => edges.push((u, v, 1)),
                2 => edges.push((u, v, -1)),
                _ => {}
            }
            code /= 3;
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
