//! Distinct eigenvalues, spectral projectors and the Perron vector of a
//! graph's adjacency matrix.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, dot, frobenius, jacobi_eigen, matvec};
use crate::par;
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    /// Row-major `n×n` orthogonal projectors, one per distinct eigenvalue.
    projectors: Vec<Vec<f64>>,
    perron: Vec<f64>,
    pi: Vec<f64>,
    raw_eigenvalues: Vec<f64>,
    cluster_gap: f64,
    sweeps: usize,
}

/// Full decomposition of the adjacency matrix. Eigenvalues closer than
/// `tol_eig · max(1, ‖A‖_F)` to their predecessor (in descending order) are
/// merged into one distinct eigenvalue whose value is the cluster mean.
pub fn spectral_decomposition(g: &Graph, tol_eig: f64) -> Result<Spectrum> {
    let n = g.n();
    let a = g.adjacency_dense();
    let gap = tol_eig * frobenius(&a).max(1.0);
    let eig = jacobi_eigen(&a, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.values[j].total_cmp(&eig.values[i]));
    let raw_eigenvalues: Vec<f64> = order.iter().map(|&i| eig.values[i]).collect();

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        match clusters.last_mut() {
            Some(cluster) if raw_eigenvalues[pos - 1] - raw_eigenvalues[pos] <= gap => {
                cluster.push(i)
            }
            _ => clusters.push(vec![i]),
        }
    }
    if clusters[0].len() != 1 {
        return Err(Error::PerronCluster {
            size: clusters[0].len(),
        });
    }

    let eigenvalues: Vec<f64> = clusters
        .iter()
        .map(|cl| cl.iter().map(|&i| eig.values[i]).sum::<f64>() / cl.len() as f64)
        .collect();
    let multiplicities = clusters.iter().map(Vec::len).collect();

    let projectors = par::map_slice(&clusters, |cluster| {
        let mut e = vec![0.0; n * n];
        for &i in cluster {
            let v = &eig.vectors[i];
            for r in 0..n {
                let vr = v[r];
                for (c, entry) in e[r * n..(r + 1) * n].iter_mut().enumerate() {
                    *entry += vr * v[c];
                }
            }
        }
        e
    });

    let mut perron = eig.vectors[clusters[0][0]].clone();
    if perron.iter().sum::<f64>() < 0.0 {
        perron.iter_mut().for_each(|x| *x = -*x);
    }
    let min = perron.iter().copied().fold(f64::INFINITY, f64::min);
    if min.is_nan() || min <= 0.0 {
        return Err(Error::Inconsistent(format!(
            "Perron eigenvector has a non-positive entry ({min:e})"
        )));
    }
    perron.iter_mut().for_each(|x| *x /= min);

    let pi = (0..eigenvalues.len())
        .map(|l| {
            (0..eigenvalues.len())
                .filter(|&h| h != l)
                .map(|h| (eigenvalues[l] - eigenvalues[h]).abs())
                .product()
        })
        .collect();

    Ok(Spectrum {
        n,
        eigenvalues,
        multiplicities,
        projectors,
        perron,
        pi,
        raw_eigenvalues,
        cluster_gap: gap,
        sweeps: eig.sweeps,
    })
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ_0 > λ_1 > … > λ_d`
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projector(&self, l: usize) -> &[f64] {
        &self.projectors[l]
    }

    /// Positive `λ_0` eigenvector with minimum entry 1.
    pub fn perron(&self) -> &[f64] {
        &self.perron
    }

    pub fn perron_norm_sq(&self) -> f64 {
        dot(&self.perron, &self.perron)
    }

    /// `π_l = Π_{h≠l} |λ_l − λ_h|`
    pub fn pi(&self) -> &[f64] {
        &self.pi
    }

    /// Every eigenvalue with repetition, descending.
    pub fn raw_eigenvalues(&self) -> &[f64] {
        &self.raw_eigenvalues
    }

    pub fn cluster_gap(&self) -> f64 {
        self.cluster_gap
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// `E_l u`
    pub fn project(&self, l: usize, u: &[f64]) -> Result<Vec<f64>> {
        if l >= self.eigenvalues.len() {
            return Err(Error::IndexOutOfRange {
                index: l,
                max: self.eigenvalues.len() - 1,
            });
        }
        if u.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: u.len(),
            });
        }
        Ok(self.project_unchecked(l, u))
    }

    pub(crate) fn project_unchecked(&self, l: usize, u: &[f64]) -> Vec<f64> {
        matvec(&self.projectors[l], self.n, u)
    }

    /// `Z_l` with `Z_l(λ_h) = δ_lh` on the full spectrum.
    pub fn lagrange(&self, l: usize) -> Result<Polynomial> {
        let d = self.eigenvalues.len() - 1;
        if l > d {
            return Err(Error::IndexOutOfRange { index: l, max: d });
        }
        let others: Vec<f64> = (0..=d)
            .filter(|&h| h != l)
            .map(|h| self.eigenvalues[h])
            .collect();
        let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(Polynomial::from_roots(&others, sign / self.pi[l]))
    }

    /// Largest entrywise violation among the projector identities:
    /// `Σ E_l = I`, `E_l E_h = δ_lh E_l`, `E_l = E_lᵀ`, `A E_l = λ_l E_l`,
    /// `Σ λ_l E_l = A`, `tr E_l = m(λ_l)`, and `A ν = λ_0 ν`.
    pub fn identity_defect(&self, g: &Graph) -> f64 {
        let n = self.n;
        let d = self.eigenvalues.len();
        let a = g.adjacency_dense();
        let mut worst: f64 = 0.0;
        let mut sum = vec![0.0; n * n];
        let mut recon = vec![0.0; n * n];
        for l in 0..d {
            let e = &self.projectors[l];
            linalg::axpy(&mut sum, 1.0, e);
            linalg::axpy(&mut recon, self.eigenvalues[l], e);
            let trace: f64 = (0..n).map(|i| e[i * n + i]).sum();
            worst = worst.max((trace - self.multiplicities[l] as f64).abs());
            for h in l..d {
                let f = &self.projectors[h];
                for r in 0..n {
                    for c in 0..n {
                        let prod: f64 = (0..n).map(|k| e[r * n + k] * f[k * n + c]).sum();
                        let target = if l == h { e[r * n + c] } else { 0.0 };
                        worst = worst.max((prod - target).abs());
                    }
                }
            }
            for r in 0..n {
                for c in 0..n {
                    worst = worst.max((e[r * n + c] - e[c * n + r]).abs());
                    let ae: f64 = (0..n).map(|k| a[r * n + k] * e[k * n + c]).sum();
                    worst = worst.max((ae - self.eigenvalues[l] * e[r * n + c]).abs());
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                let id = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((sum[r * n + c] - id).abs());
                worst = worst.max((recon[r * n + c] - a[r * n + c]).abs());
            }
        }
        let anu = matvec(&a, n, &self.perron);
        for (x, v) in anu.iter().zip(&self.perron) {
            worst = worst.max((x - self.eigenvalues[0] * v).abs());
        }
        worst
    }
}

/// `p(A) u` by Horner's rule with sparse adjacency products.
pub fn apply_polynomial(g: &Graph, p: &Polynomial, u: &[f64]) -> Result<Vec<f64>> {
    if u.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: u.len(),
        });
    }
    let mut acc = vec![0.0; u.len()];
    for &c in p.coeffs().iter().rev() {
        acc = g.adjacency_apply(&acc)?;
        linalg::axpy(&mut acc, c, u);
    }
    Ok(acc)
}
