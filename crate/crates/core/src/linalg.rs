//! Small dense helpers and a cyclic Jacobi eigensolver for real symmetric
//! matrices stored row-major in a `Vec<f64>`.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_RATIO: f64 = 1e-14;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `a - b`
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `y += s·x`
pub fn axpy(y: &mut [f64], s: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += s * xi;
    }
}

/// Row-major `n×n` matrix times vector.
pub fn matvec(m: &[f64], n: usize, u: &[f64]) -> Vec<f64> {
    m.chunks_exact(n).map(|row| dot(row, u)).collect()
}

pub fn frobenius(m: &[f64]) -> f64 {
    norm(m)
}

/// Eigenpairs of a symmetric matrix, in no particular order.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[j]` is the unit eigenvector of `values[j]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic-by-row Jacobi rotations. Converged once the off-diagonal Frobenius
/// mass drops below `1e-14·‖A‖_F`; fails after [`MAX_SWEEPS`] sweeps.
pub fn jacobi_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    if matrix.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: matrix.len(),
        });
    }
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let target = OFF_DIAGONAL_RATIO * frobenius(&a);

    let mut sweeps = 0;
    while off_diagonal(&a, n) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
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
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    let vectors = (0..n)
        .map(|j| (0..n).map(|k| v[k * n + j]).collect())
        .collect();
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        v
    }

    #[test]
    fn two_by_two() {
        let eig = jacobi_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        let vals = sorted(eig.values.clone());
        assert!((vals[0] - 3.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn already_diagonal_needs_no_sweeps() {
        let eig = jacobi_eigen(&[5.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(eig.sweeps, 0);
        assert_eq!(eig.values, vec![5.0, -1.0]);
    }

    #[test]
    fn eigenpairs_satisfy_definition() {
        // path on 5 vertices: eigenvalues 2cos(kπ/6)
        let n = 5;
        let mut m = vec![0.0; n * n];
        for i in 0..n - 1 {
            m[i * n + i + 1] = 1.0;
            m[(i + 1) * n + i] = 1.0;
        }
        let eig = jacobi_eigen(&m, n).unwrap();
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            let av = matvec(&m, n, vec);
            let resid = norm(&sub(&av, &scale(vec, *val)));
            assert!(resid < 1e-12, "residual {resid}");
            assert!((norm(vec) - 1.0).abs() < 1e-13);
        }
        let expected: Vec<f64> = (1..=5)
            .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / 6.0).cos())
            .collect();
        for (got, want) in sorted(eig.values).iter().zip(sorted(expected)) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn dimension_checked() {
        assert!(matches!(
            jacobi_eigen(&[1.0, 2.0], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
