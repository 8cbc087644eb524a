use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix { order, data: vec![BigInt::zero(); order * order] }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        IntMatrix { order, data }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "matrix rows must form a square");
        Self::from_fn(order, |i, j| BigInt::from(rows[i][j]))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.order).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn neg(&self) -> Self {
        IntMatrix { order: self.order, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entries as `i128` when every one fits.
    pub fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(ToPrimitive::to_i128).collect()
    }

    /// Entries as `f64`, row-major. Large entries lose precision.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Largest absolute row sum (the induced infinity norm).
    pub fn max_abs_row_sum(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.order {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
