//! Berkowitz's division-free characteristic polynomial.
//!
//! With `A_k` the leading `k×k` block written as `[[A_{k-1}, C], [R, a]]`, the
//! coefficient vector of `det(xI − A_k)` is a lower-triangular Toeplitz matrix
//! with first column `(1, −a, −RC, −RA_{k-1}C, …)` applied to that of
//! `A_{k-1}`. Only ring operations occur, so intermediate values stay integral.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CharPoly;
use crate::matrix::IntMatrix;

pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let n = m.order();
    // highest degree first while building
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let last = k - 1;
        let a = m.get(last, last);
        let mut toeplitz = Vec::with_capacity(k + 1);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a);
        // v = A_{k-1}^j C
        let mut v: Vec<BigInt> = (0..last).map(|i| m.get(i, last).clone()).collect();
        for _ in 2..=k {
            let rv: BigInt = (0..last).map(|i| m.get(last, i) * &v[i]).sum();
            toeplitz.push(-rv);
            v = (0..last)
                .map(|i| (0..last).map(|j| m.get(i, j) * &v[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * p;
            }
        }
        poly = next;
    }
    poly.reverse();
    CharPoly::new(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// det(xI − M) by permutation expansion with polynomial entries
    /// (ascending coefficient vectors).
    fn leibniz_char_poly(m: &[Vec<i64>]) -> Vec<BigInt> {
        let n = m.len();
        let entry = |i: usize, j: usize| -> Vec<BigInt> {
            if i == j {
                vec![BigInt::from(-m[i][j]), BigInt::one()]
            } else {
                vec![BigInt::from(-m[i][j])]
            }
        };
        let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        let mut total = vec![BigInt::zero(); n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = vec![BigInt::one()];
            for (i, &p) in perm.iter().enumerate() {
                term = mul(&term, &entry(i, p));
            }
            for (k, c) in term.into_iter().enumerate() {
                if inversions % 2 == 1 {
                    total[k] -= c;
                } else {
                    total[k] += c;
                }
            }
            if !crate::graph::next_permutation(&mut perm) {
                break;
            }
        }
        total
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(char_poly(&IntMatrix::zeros(0)).coeffs(), ints(&[1]).as_slice());
        assert_eq!(char_poly(&IntMatrix::zeros(1)).coeffs(), ints(&[0, 1]).as_slice());
        let edge = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]);
        assert_eq!(char_poly(&edge).coeffs(), ints(&[0, -2, 1]).as_slice());
        let tri = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(char_poly(&tri).coeffs(), ints(&[0, 9, -6, 1]).as_slice());
    }

    #[test]
    fn matches_permutation_expansion() {
        let mut state = 0x9e37_79b9_u64;
        for trial in 0..120 {
            let n = 1 + trial % 6;
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    rows[i][j] = (state % 9) as i64 - 4;
                }
            }
            let got = char_poly(&IntMatrix::from_rows(&rows));
            assert_eq!(got.coeffs(), leibniz_char_poly(&rows).as_slice(), "{rows:?}");
        }
    }
}
