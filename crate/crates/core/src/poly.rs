//! Real polynomials, the C-local scalar product, the predistance polynomial
//! system and the C-local Hoffman polynomial.

use crate::error::{Error, Result};
use crate::local::LocalSpectrum;

/// Dense polynomial, coefficients in ascending degree. Trailing exact zeros
/// are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn x() -> Self {
        Polynomial::new(vec![0.0, 1.0])
    }

    /// `lead · Π (x − r)`
    pub fn from_roots(roots: &[f64], lead: f64) -> Self {
        roots
            .iter()
            .fold(Polynomial::constant(lead), |acc, &r| acc.mul_linear(r))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Drops trailing coefficients with magnitude at most `tol`.
    pub fn trimmed(&self, tol: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.abs() <= tol) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `self · (x − r)`
    pub fn mul_linear(&self, r: f64) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= r * c;
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Polynomial, i: usize| p.coeffs.get(i).copied().unwrap_or(0.0);
        Polynomial::new((0..len).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Newton divided differences through `(nodes[i], values[i])`, expanded to
/// monomial form. Nodes must be distinct.
pub fn interpolate(nodes: &[f64], values: &[f64]) -> Result<Polynomial> {
    if nodes.len() != values.len() {
        return Err(Error::DimensionMismatch {
            expected: nodes.len(),
            got: values.len(),
        });
    }
    let m = nodes.len();
    let mut table = values.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level]);
        }
    }
    // Horner on the Newton form
    let mut p = Polynomial::zero();
    for i in (0..m).rev() {
        p = p.mul_linear(nodes[i]).add(&Polynomial::constant(table[i]));
    }
    Ok(p)
}

/// Interpolates on the local eigenvalues `μ_0 > … > μ_{d_C}`.
pub fn interpolate_on_local_spectrum(values: &[f64], ls: &LocalSpectrum) -> Result<Polynomial> {
    interpolate(ls.mu(), values)
}

/// `⟨p, q⟩_C = Σ_l m_C(μ_l) p(μ_l) q(μ_l)`
pub fn local_inner_product(p: &Polynomial, q: &Polynomial, ls: &LocalSpectrum) -> f64 {
    ls.mu()
        .iter()
        .zip(ls.mult())
        .map(|(&mu, &m)| m * p.eval(mu) * q.eval(mu))
        .sum()
}

/// The C-local predistance polynomials `p_0, …, p_{d_C}` together with their
/// values on the local eigenvalues and the three-term recurrence
/// `x·p_k = b_{k−1} p_{k−1} + a_k p_k + c_{k+1} p_{k+1}`.
#[derive(Debug, Clone)]
pub struct PredistanceSystem {
    polys: Vec<Polynomial>,
    /// `values[k][l] = p_k(μ_l)`
    values: Vec<Vec<f64>>,
    rec_a: Vec<f64>,
    rec_b: Vec<f64>,
    rec_c: Vec<f64>,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl PredistanceSystem {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn poly(&self, k: usize) -> &Polynomial {
        &self.polys[k]
    }

    pub fn dual_degree(&self) -> usize {
        self.polys.len() - 1
    }

    /// `p_k(μ_l)` for every local eigenvalue.
    pub fn values(&self, k: usize) -> &[f64] {
        &self.values[k]
    }

    /// `p_k(μ_0)`
    pub fn at_top(&self, k: usize) -> f64 {
        self.values[k][0]
    }

    /// `a_k` for `0 ≤ k ≤ d_C`.
    pub fn rec_a(&self) -> &[f64] {
        &self.rec_a
    }

    /// `b_k` for `0 ≤ k ≤ d_C`; `b_{d_C}` is stored as 0.
    pub fn rec_b(&self) -> &[f64] {
        &self.rec_b
    }

    /// `c_k` for `0 ≤ k ≤ d_C`; `c_0` is stored as 0.
    pub fn rec_c(&self) -> &[f64] {
        &self.rec_c
    }

    /// `⟨p_k, p_h⟩_C` computed from the node values.
    pub fn gram(&self, k: usize, h: usize) -> f64 {
        self.weights
            .iter()
            .zip(self.values[k].iter().zip(&self.values[h]))
            .map(|(w, (a, b))| w * a * b)
            .sum()
    }

    /// Largest violation of `⟨p_k,p_h⟩_C = δ_kh p_k(μ_0)`, each entry scaled
    /// by `max(1, sqrt(p_k(μ_0) p_h(μ_0)))`.
    pub fn orthogonality_defect(&self) -> f64 {
        let d = self.dual_degree();
        let mut worst: f64 = 0.0;
        for k in 0..=d {
            for h in 0..=k {
                let target = if k == h { self.at_top(k) } else { 0.0 };
                let scale = (self.at_top(k) * self.at_top(h)).sqrt().max(1.0);
                worst = worst.max((self.gram(k, h) - target).abs() / scale);
            }
        }
        worst
    }

    /// Coefficient-norm residual of the recurrence at each `k`, relative to
    /// `max(1, ‖x·p_k‖)`. At `k = d_C` the product is reduced modulo
    /// `Π (x − μ_l)`.
    pub fn recurrence_residuals(&self) -> Vec<f64> {
        let d = self.dual_degree();
        let minimal = Polynomial::from_roots(&self.nodes, 1.0);
        (0..=d)
            .map(|k| {
                let xp = self.polys[k].mul_linear(0.0);
                let mut rhs = self.polys[k].scale(self.rec_a[k]);
                if k > 0 {
                    rhs = rhs.add(&self.polys[k - 1].scale(self.rec_b[k - 1]));
                }
                if k < d {
                    rhs = rhs.add(&self.polys[k + 1].scale(self.rec_c[k + 1]));
                } else {
                    rhs = rhs.add(&minimal.scale(self.polys[k].leading()));
                }
                xp.sub(&rhs).coeff_norm() / xp.coeff_norm().max(1.0)
            })
            .collect()
    }

    /// `|lead(p_k)| / ‖p_k‖` in coefficient norm. The normalization
    /// `⟨p_k,p_k⟩_C = p_k(μ_0)` can make high-degree members tiny, so the
    /// degree test is taken relative to the polynomial's own size.
    pub fn relative_leading(&self, k: usize) -> f64 {
        let p = &self.polys[k];
        p.leading().abs() / p.coeff_norm()
    }

    /// `deg p_k = k` for every `k`, with a relative leading coefficient above
    /// `tol_coef`.
    pub fn degree_ladder_holds(&self, tol_coef: f64) -> bool {
        (0..self.polys.len())
            .all(|k| self.polys[k].degree() == Some(k) && self.relative_leading(k) > tol_coef)
    }

    /// Local eigenvalues at which `p_k` vanishes (|p_k(μ_l)| ≤ tol·max(1, p_k(μ_0))).
    pub fn zeros_on_nodes(&self, k: usize, tol: f64) -> Vec<usize> {
        let scale = self.at_top(k).max(1.0);
        (0..self.nodes.len())
            .filter(|&l| self.values[k][l].abs() <= tol * scale)
            .collect()
    }
}

/// Builds the predistance system for the discrete measure `{(μ_l, m_C(μ_l))}`.
///
/// The orthonormal family comes from a Lanczos process on `diag(μ)` started at
/// `sqrt(m_C)` with full reorthogonalization; then `p_k = P_k(μ_0)·P_k`, which
/// is the monic orthogonal family rescaled to `⟨p_k,p_k⟩_C = p_k(μ_0)`.
/// `tol_poly` bounds the Lanczos off-diagonal below which the process is
/// declared broken down.
pub fn predistance_polynomials(ls: &LocalSpectrum, tol_poly: f64) -> Result<PredistanceSystem> {
    let nodes = ls.mu().to_vec();
    let weights = ls.mult().to_vec();
    let m = nodes.len();
    let node_scale = nodes.iter().fold(1.0f64, |s, x| s.max(x.abs()));

    let mut basis: Vec<Vec<f64>> = vec![weights.iter().map(|w| w.sqrt()).collect()];
    let first = crate::linalg::norm(&basis[0]);
    basis[0].iter_mut().for_each(|v| *v /= first);
    let mut alpha = Vec::with_capacity(m);
    let mut beta = vec![0.0];

    for k in 0..m {
        let mut u: Vec<f64> = basis[k].iter().zip(&nodes).map(|(v, x)| v * x).collect();
        alpha.push(crate::linalg::dot(&u, &basis[k]));
        if k + 1 == m {
            break;
        }
        for _ in 0..2 {
            for b in &basis {
                let proj = crate::linalg::dot(&u, b);
                crate::linalg::axpy(&mut u, -proj, b);
            }
        }
        let next = crate::linalg::norm(&u);
        if next <= tol_poly * node_scale {
            return Err(Error::Breakdown {
                degree: k + 1,
                norm: next,
            });
        }
        u.iter_mut().for_each(|v| *v /= next);
        beta.push(next);
        basis.push(u);
    }

    // orthonormal polynomials in coefficient form
    let mut ortho: Vec<Polynomial> = vec![Polynomial::constant(1.0)];
    for k in 0..m.saturating_sub(1) {
        let mut next = ortho[k].mul_linear(alpha[k]);
        if k > 0 {
            next = next.sub(&ortho[k - 1].scale(beta[k]));
        }
        ortho.push(next.scale(1.0 / beta[k + 1]));
    }

    // P_k(μ_l) = basis[k][l] / sqrt(w_l)
    let ortho_values: Vec<Vec<f64>> = basis
        .iter()
        .map(|v| v.iter().zip(&weights).map(|(x, w)| x / w.sqrt()).collect())
        .collect();
    let top: Vec<f64> = ortho_values.iter().map(|vals| vals[0]).collect();

    let polys: Vec<Polynomial> = ortho.iter().zip(&top).map(|(p, &t)| p.scale(t)).collect();
    let values: Vec<Vec<f64>> = ortho_values
        .iter()
        .zip(&top)
        .map(|(vals, &t)| vals.iter().map(|v| v * t).collect())
        .collect();

    let mut rec_b = vec![0.0; m];
    let mut rec_c = vec![0.0; m];
    for k in 1..m {
        rec_c[k] = beta[k] * top[k - 1] / top[k];
        rec_b[k - 1] = beta[k] * top[k] / top[k - 1];
    }

    Ok(PredistanceSystem {
        polys,
        values,
        rec_a: alpha,
        rec_b,
        rec_c,
        nodes,
        weights,
    })
}

/// `H_C = ‖ν‖² / (π_0(C)‖ρC‖²) · Π_{l≥1} (x − μ_l)`, the polynomial with
/// `H_C(A) ρC = ν`.
pub fn hoffman_polynomial(ls: &LocalSpectrum, norm_nu_sq: f64, norm_rho_sq: f64) -> Polynomial {
    let lead = norm_nu_sq / (ls.pi()[0] * norm_rho_sq);
    Polynomial::from_roots(&ls.mu()[1..], lead)
}
