//! Cyclic Jacobi rotations for dense real symmetric matrices.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the symmetric row-major matrix `a`, non-increasing.
///
/// Rotations accumulate into an eigenvector basis that is used only for the
/// residual check `‖Mv − λv‖ ≤ residual_tol`.
pub(crate) fn symmetric_eigenvalues(matrix: &[f64], n: usize, residual_tol: f64) -> Result<Vec<f64>> {
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob2: f64 = a.iter().map(|x| x * x).sum();
    let target = (f64::EPSILON * f64::EPSILON) * frob2;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[p * n + q] * a[p * n + q])
            .sum();
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::Numeric(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps on {matrix:?}")));
    }

    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    for (j, &lambda) in values.iter().enumerate() {
        let residual = (0..n)
            .map(|i| {
                let mv: f64 = (0..n).map(|k| matrix[i * n + k] * v[k * n + j]).sum();
                let r = mv - lambda * v[i * n + j];
                r * r
            })
            .sum::<f64>()
            .sqrt();
        if residual.is_nan() || residual > residual_tol {
            return Err(Error::Numeric(format!(
                "eigenpair {j} residual {residual:e} exceeds {residual_tol:e} on {matrix:?}"
            )));
        }
    }
    let mut values = values;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let ev = symmetric_eigenvalues(&[1.0, -1.0, -1.0, 1.0], 2, 1e-10).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-12 && ev[1].abs() < 1e-12);
    }

    #[test]
    fn triangle_laplacian() {
        let m = [2.0, -1.0, -1.0, -1.0, 2.0, -1.0, -1.0, -1.0, 2.0];
        let ev = symmetric_eigenvalues(&m, 3, 1e-10).unwrap();
        for (got, want) in ev.iter().zip([3.0, 3.0, 0.0]) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn path_laplacian_closed_form() {
        // path on n vertices: eigenvalues 2 - 2 cos(k pi / n)
        let n = 7;
        let mut m = vec![0.0; n * n];
        for i in 0..n - 1 {
            m[i * n + i] += 1.0;
            m[(i + 1) * n + i + 1] += 1.0;
            m[i * n + i + 1] = -1.0;
            m[(i + 1) * n + i] = -1.0;
        }
        let ev = symmetric_eigenvalues(&m, n, 1e-10).unwrap();
        let mut want: Vec<f64> = (0..n).map(|k| 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos()).collect();
        want.sort_by(|x, y| y.total_cmp(x));
        for (got, w) in ev.iter().zip(&want) {
            assert!((got - w).abs() < 1e-10);
        }
    }

    #[test]
    fn empty_matrix() {
        assert!(symmetric_eigenvalues(&[], 0, 1e-10).unwrap().is_empty());
    }
}
