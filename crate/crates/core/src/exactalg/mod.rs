//! Exact integer linear algebra on net Laplacians.
//!
//! Nullity is decided only by exact routes: fraction-free rank, trailing zeros
//! of the division-free characteristic polynomial, and Descartes' rule on that
//! polynomial. Floating eigenvalues exist for interlacing comparisons and as a
//! third, independent nullity estimate.

mod charpoly;
mod jacobi;
mod rank;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{input, Result};
use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;

pub use charpoly::char_poly;
pub use rank::rank_exact;

/// Coefficients `c₀..cₙ` of `det(xI − M) = Σ cₖ xᵏ`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Multiplicity of the root `0`.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Sign changes in `cₙ, …, c₀`, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut changes = 0;
        for c in self.coeffs.iter().rev().filter(|c| !c.is_zero()) {
            let pos = c.is_positive();
            if last.is_some_and(|l| l != pos) {
                changes += 1;
            }
            last = Some(pos);
        }
        changes
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn as_triple(&self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }
}

impl Serialize for Inertia {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.positive, self.negative, self.zero].serialize(s)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

/// Exact spectral data of one net Laplacian plus its float spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub rank: usize,
    pub nullity: usize,
    pub inertia: Inertia,
    /// Non-increasing.
    pub eigenvalues: Vec<f64>,
}

/// `η(Γ) = n − rank(L±(Γ))`.
pub fn nullity(g: &SignedGraph) -> usize {
    let n = g.n();
    match rank::rank_i128(g.net_laplacian_i128(), n) {
        Some(r) => n - r,
        None => n - rank_exact(&g.net_laplacian()),
    }
}

pub fn rank(g: &SignedGraph) -> usize {
    g.n() - nullity(g)
}

/// Exact inertia of a symmetric matrix via Descartes' rule of signs.
///
/// Exact because a real symmetric matrix has only real eigenvalues, so the
/// number of sign variations equals the number of positive roots.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return input(format!("inertia needs a symmetric matrix, got {m}"));
    }
    let cp = char_poly(m);
    let zero = cp.trailing_zeros();
    let positive = cp.sign_variations();
    Ok(Inertia { positive, negative: m.order() - positive - zero, zero })
}

/// Float eigenvalues of a symmetric matrix, non-increasing.
pub fn eigenvalues_float(m: &IntMatrix) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return input(format!("eigenvalues_float needs a symmetric matrix, got {m}"));
    }
    let tol = 1e-8 * (1.0 + m.max_abs_row_sum());
    jacobi::symmetric_eigenvalues(&m.to_f64(), m.order(), tol)
}

/// Threshold under which a float eigenvalue counts as zero:
/// `1e-8 · (1 + max absolute row sum)`.
pub fn zero_tolerance(m: &IntMatrix) -> f64 {
    1e-8 * (1.0 + m.max_abs_row_sum())
}

/// Eigenvalues within [`zero_tolerance`] of zero.
pub fn float_zero_count(m: &IntMatrix, eigenvalues: &[f64]) -> usize {
    let tol = zero_tolerance(m);
    eigenvalues.iter().filter(|l| l.abs() <= tol).count()
}

pub fn spectral_summary(g: &SignedGraph) -> Result<SpectralSummary> {
    let l = g.net_laplacian();
    let rank = rank_exact(&l);
    Ok(SpectralSummary {
        rank,
        nullity: g.n() - rank,
        inertia: inertia(&l)?,
        eigenvalues: eigenvalues_float(&l)?,
    })
}
