//! Seeded generators for random and structured signed graphs.
//!
//! Every generator draws from a `ChaCha8Rng` seeded with the caller's seed, so
//! identical parameters and seed give an identical edge list on every
//! platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Result};
use crate::graph::SignedGraph;

/// Sign pattern imposed on each cycle of a generated cactus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleProfile {
    /// Independent random signs with the given negative probability.
    Random,
    /// Every cycle has `m⁺ ≠ m⁻`.
    Unbalanced,
    /// Every cycle has `m⁺ = m⁻` (so every cycle has even length).
    Balanced,
    /// At least one cycle of each kind; needs two or more cycles.
    Mixed,
}

impl std::str::FromStr for CycleProfile {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(CycleProfile::Random),
            "unbalanced" => Ok(CycleProfile::Unbalanced),
            "balanced" => Ok(CycleProfile::Balanced),
            "mixed" => Ok(CycleProfile::Mixed),
            other => input(format!("unknown cycle profile {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    RandomTree { n: usize, neg_prob: f64 },
    RandomUnicyclic { n: usize, cycle_len: usize, neg_prob: f64 },
    RandomCactus { n: usize, cycles: usize, profile: CycleProfile, neg_prob: f64 },
    /// Erdős–Rényi underlying graph.
    RandomSigned { n: usize, edge_prob: f64, neg_prob: f64 },
    /// A random spanning tree plus independent extra edges; always connected.
    RandomConnected { n: usize, edge_prob: f64, neg_prob: f64 },
    /// Terminals `0` and `1` joined by three internally disjoint paths with the
    /// given signs (each list's length is the path's edge count).
    Theta { signs: [Vec<i64>; 3] },
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_prob(p: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("{what} must lie in [0, 1], got {p}"));
    }
    Ok(())
}

fn random_sign(rng: &mut ChaCha8Rng, neg_prob: f64) -> i64 {
    if rng.gen_bool(neg_prob) {
        -1
    } else {
        1
    }
}

pub fn generate(kind: &GraphKind, seed: u64) -> Result<SignedGraph> {
    let mut rng = rng_for(seed);
    match *kind {
        GraphKind::RandomTree { n, neg_prob } => random_tree(n, neg_prob, &mut rng),
        GraphKind::RandomUnicyclic { n, cycle_len, neg_prob } => random_unicyclic(n, cycle_len, neg_prob, &mut rng),
        GraphKind::RandomCactus { n, cycles, profile, neg_prob } => random_cactus(n, cycles, profile, neg_prob, &mut rng),
        GraphKind::RandomSigned { n, edge_prob, neg_prob } => random_signed(n, edge_prob, neg_prob, &mut rng),
        GraphKind::RandomConnected { n, edge_prob, neg_prob } => random_connected(n, edge_prob, neg_prob, &mut rng),
        GraphKind::Theta { ref signs } => theta_graph(signs),
    }
}

/// Attaches each vertex to a uniformly chosen earlier one, then relabels.
fn random_tree(n: usize, neg_prob: f64, rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    check_prob(neg_prob, "negative-sign probability")?;
    if n == 0 {
        return input("a tree needs at least one vertex");
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j], random_sign(rng, neg_prob)));
    }
    SignedGraph::new(n, edges)
}

fn random_unicyclic(n: usize, cycle_len: usize, neg_prob: f64, rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    check_prob(neg_prob, "negative-sign probability")?;
    if cycle_len < 3 || cycle_len > n {
        return input(format!("cycle length {cycle_len} must lie in 3..={n}"));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::with_capacity(n);
    for i in 0..cycle_len {
        edges.push((perm[i], perm[(i + 1) % cycle_len], random_sign(rng, neg_prob)));
    }
    for i in cycle_len..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j], random_sign(rng, neg_prob)));
    }
    SignedGraph::new(n, edges)
}

/// Signs for one cycle of length `len`: balanced means exactly `len / 2`
/// negative edges at random positions.
fn cycle_signs(len: usize, balanced: Option<bool>, neg_prob: f64, rng: &mut ChaCha8Rng) -> Vec<i64> {
    match balanced {
        Some(true) => {
            let mut s: Vec<i64> = (0..len).map(|i| if i < len / 2 { -1 } else { 1 }).collect();
            s.shuffle(rng);
            s
        }
        Some(false) => loop {
            let s: Vec<i64> = (0..len).map(|_| random_sign(rng, neg_prob)).collect();
            if s.iter().sum::<i64>() != 0 {
                break s;
            }
        },
        None => (0..len).map(|_| random_sign(rng, neg_prob)).collect(),
    }
}

enum Piece {
    Cycle { len: usize, balanced: Option<bool> },
    Pendant,
}

/// Cycles and pendant vertices attached one at a time at random existing
/// vertices, so every block is a cycle or a bridge.
fn random_cactus(
    n: usize,
    cycles: usize,
    profile: CycleProfile,
    neg_prob: f64,
    rng: &mut ChaCha8Rng,
) -> Result<SignedGraph> {
    check_prob(neg_prob, "negative-sign probability")?;
    if n == 0 {
        return input("a cactus needs at least one vertex");
    }
    if profile == CycleProfile::Mixed && cycles < 2 {
        return input("a mixed cactus needs at least two cycles");
    }
    let mut kinds: Vec<Option<bool>> = match profile {
        CycleProfile::Random => vec![None; cycles],
        CycleProfile::Unbalanced => vec![Some(false); cycles],
        CycleProfile::Balanced => vec![Some(true); cycles],
        CycleProfile::Mixed => {
            let mut k = vec![Some(true), Some(false)];
            k.extend((2..cycles).map(|_| Some(rng.gen_bool(0.5))));
            k
        }
    };
    kinds.shuffle(rng);

    let min_len = |b: Option<bool>| if b == Some(true) { 4 } else { 3 };
    let required: usize = kinds.iter().map(|&b| min_len(b) - 1).sum();
    if required > n - 1 {
        return input(format!("{cycles} cycles of profile {profile:?} need at least {} vertices, got {n}", required + 1));
    }
    let mut spare = n - 1 - required;
    let mut pieces: Vec<Piece> = Vec::new();
    for b in kinds {
        let mut len = min_len(b);
        // grow some cycles; balanced ones by an even amount
        let step = if b == Some(true) { 2 } else { 1 };
        while spare >= step && rng.gen_bool(0.4) {
            len += step;
            spare -= step;
        }
        pieces.push(Piece::Cycle { len, balanced: b });
    }
    pieces.extend((0..spare).map(|_| Piece::Pendant));
    pieces.shuffle(rng);

    let mut edges = Vec::with_capacity(n + cycles);
    let mut next = 1;
    for piece in pieces {
        let anchor = rng.gen_range(0..next);
        match piece {
            Piece::Pendant => {
                edges.push((anchor, next, random_sign(rng, neg_prob)));
                next += 1;
            }
            Piece::Cycle { len, balanced } => {
                let signs = cycle_signs(len, balanced, neg_prob, rng);
                let mut ring = vec![anchor];
                ring.extend(next..next + len - 1);
                next += len - 1;
                for i in 0..len {
                    edges.push((ring[i], ring[(i + 1) % len], signs[i]));
                }
            }
        }
    }
    debug_assert_eq!(next, n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    SignedGraph::new(n, edges.into_iter().map(|(a, b, s)| (perm[a], perm[b], s)))
}

fn random_signed(n: usize, edge_prob: f64, neg_prob: f64, rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    check_prob(edge_prob, "edge probability")?;
    check_prob(neg_prob, "negative-sign probability")?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, random_sign(rng, neg_prob)));
            }
        }
    }
    SignedGraph::new(n, edges)
}

fn random_connected(n: usize, edge_prob: f64, neg_prob: f64, rng: &mut ChaCha8Rng) -> Result<SignedGraph> {
    check_prob(edge_prob, "edge probability")?;
    let tree = random_tree(n, neg_prob, rng)?;
    let mut edges: Vec<(usize, usize, i64)> = tree.edges().iter().map(|e| (e.u, e.v, e.sign.value())).collect();
    for u in 0..n {
        for v in u + 1..n {
            if tree.find_edge(u, v).is_none() && rng.gen_bool(edge_prob) {
                edges.push((u, v, random_sign(rng, neg_prob)));
            }
        }
    }
    SignedGraph::new(n, edges)
}

/// Theta graph with terminals `0` and `1`; the internal vertices of path `i`
/// follow those of path `i − 1`, listed from terminal `0` toward terminal `1`.
pub fn theta_graph(signs: &[Vec<i64>; 3]) -> Result<SignedGraph> {
    if signs.iter().any(Vec::is_empty) {
        return input("theta path lengths must be at least 1");
    }
    if signs.iter().filter(|s| s.len() == 1).count() > 1 {
        return input("at most one theta path may have length 1");
    }
    let n = 2 + signs.iter().map(|s| s.len() - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for path in signs {
        let len = path.len();
        let mut chain = vec![0];
        chain.extend(next..next + len - 1);
        chain.push(1);
        next += len - 1;
        for (i, &s) in path.iter().enumerate() {
            edges.push((chain[i], chain[i + 1], s));
        }
    }
    SignedGraph::new(n, edges)
}

/// All-positive theta graph with path lengths `a`, `b`, `c`.
pub fn theta_lengths(a: usize, b: usize, c: usize) -> Result<SignedGraph> {
    theta_graph(&[vec![1; a], vec![1; b], vec![1; c]])
}
