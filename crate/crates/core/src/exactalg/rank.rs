//! Fraction-free (Bareiss) elimination.
//!
//! After eliminating with pivots in rows `r₀..r_k` and columns `c₀..c_k`, every
//! remaining entry is the `(k+1)`-minor on those rows and columns bordered by
//! its own row and column, so the division by the previous pivot is exact.
//! Pivots are the first nonzero entry of each column at or below the current
//! rank, with a full row swap.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::IntMatrix;

/// Rank over the rationals, exact.
pub fn rank_exact(m: &IntMatrix) -> usize {
    let n = m.order();
    if let Some(small) = m.to_i128() {
        if let Some(r) = rank_i128(small, n) {
            return r;
        }
    }
    rank_bigint(m, n)
}

/// Checked machine-integer elimination; `None` on any overflow.
pub(crate) fn rank_i128(mut a: Vec<i128>, n: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if p != rank {
            for c in 0..n {
                a.swap(p * n + c, rank * n + c);
            }
        }
        let pivot = a[rank * n + col];
        for r in rank + 1..n {
            let f = a[r * n + col];
            for c in col + 1..n {
                let lhs = pivot.checked_mul(a[r * n + c])?;
                let rhs = f.checked_mul(a[rank * n + c])?;
                a[r * n + c] = lhs.checked_sub(rhs)? / prev;
            }
            a[r * n + col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(m: &IntMatrix, n: usize) -> usize {
    let mut a: Vec<BigInt> = (0..n).flat_map(|i| m.row(i).iter().cloned()).collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !a[r * n + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for c in 0..n {
                a.swap(p * n + c, rank * n + c);
            }
        }
        let pivot = a[rank * n + col].clone();
        for r in rank + 1..n {
            let f = a[r * n + col].clone();
            for c in col + 1..n {
                let v = &pivot * &a[r * n + c] - &f * &a[rank * n + c];
                a[r * n + c] = v / &prev;
            }
            a[r * n + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
