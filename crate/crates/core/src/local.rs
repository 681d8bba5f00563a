//! The ρ map, C-multiplicities and the C-local spectrum of a vertex set.

use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::graph::{distance_partition, Graph, VertexSet};
use crate::linalg::{dot, norm};
use crate::poly::Polynomial;

/// `ρC = Σ_{i∈C} ν_i e_i` and its normalization `e_C`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSetVector {
    pub rho: Vec<f64>,
    pub norm_sq: f64,
    pub unit: Vec<f64>,
}

pub fn rho_vector(s: &Spectrum, c: &VertexSet) -> Result<WeightedSetVector> {
    if c.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = s.n();
    let mut rho = vec![0.0; n];
    for &i in c.members() {
        if i >= n {
            return Err(Error::VertexOutOfRange { vertex: i, n });
        }
        rho[i] = s.perron()[i];
    }
    let norm_sq = dot(&rho, &rho);
    let len = norm_sq.sqrt();
    let unit = rho.iter().map(|x| x / len).collect();
    Ok(WeightedSetVector { rho, norm_sq, unit })
}

/// Eigenvalues `μ_0 > … > μ_{d_C}` carrying nonzero C-multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalSpectrum {
    mu: Vec<f64>,
    mult: Vec<f64>,
    parent: Vec<usize>,
    pi: Vec<f64>,
    all_mult: Vec<f64>,
    discarded: Vec<(usize, f64)>,
    rho_norm_sq: f64,
    nu_norm_sq: f64,
}

fn moment_products(nodes: &[f64]) -> Vec<f64> {
    (0..nodes.len())
        .map(|l| {
            (0..nodes.len())
                .filter(|&h| h != l)
                .map(|h| (nodes[l] - nodes[h]).abs())
                .product()
        })
        .collect()
}

impl LocalSpectrum {
    /// Assembles a local spectrum from already-filtered data; used for
    /// hand-built fixtures.
    pub fn from_parts(
        mu: Vec<f64>,
        mult: Vec<f64>,
        parent: Vec<usize>,
        rho_norm_sq: f64,
        nu_norm_sq: f64,
    ) -> Self {
        let width = parent.iter().max().map_or(0, |m| m + 1);
        let mut all_mult = vec![0.0; width];
        for (&p, &m) in parent.iter().zip(&mult) {
            all_mult[p] = m;
        }
        LocalSpectrum {
            pi: moment_products(&mu),
            mu,
            mult,
            parent,
            all_mult,
            discarded: Vec::new(),
            rho_norm_sq,
            nu_norm_sq,
        }
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// `m_C(μ_l)` for the retained eigenvalues.
    pub fn mult(&self) -> &[f64] {
        &self.mult
    }

    pub fn dual_degree(&self) -> usize {
        self.mu.len() - 1
    }

    /// `π_l(C) = Π_{h≠l} |μ_l − μ_h|`
    pub fn pi(&self) -> &[f64] {
        &self.pi
    }

    /// Global eigenvalue index of each local eigenvalue.
    pub fn parent_indices(&self) -> &[usize] {
        &self.parent
    }

    /// `m_C(λ_l)` for every global eigenvalue, before thresholding.
    pub fn all_multiplicities(&self) -> &[f64] {
        &self.all_mult
    }

    /// `(global index, multiplicity)` pairs that fell at or below `tol_m`.
    pub fn discarded(&self) -> &[(usize, f64)] {
        &self.discarded
    }

    pub fn contains_global(&self, l: usize) -> bool {
        self.parent.binary_search(&l).is_ok()
    }

    pub fn local_index_of(&self, global: usize) -> Option<usize> {
        self.parent.binary_search(&global).ok()
    }

    pub fn rho_norm_sq(&self) -> f64 {
        self.rho_norm_sq
    }

    pub fn nu_norm_sq(&self) -> f64 {
        self.nu_norm_sq
    }
}

pub fn local_spectrum(s: &Spectrum, c: &VertexSet, tol_m: f64) -> Result<LocalSpectrum> {
    let weighted = rho_vector(s, c)?;
    Ok(local_spectrum_of_vector(s, &weighted, tol_m))
}

pub(crate) fn local_spectrum_of_vector(
    s: &Spectrum,
    weighted: &WeightedSetVector,
    tol_m: f64,
) -> LocalSpectrum {
    let all_mult: Vec<f64> = (0..s.distinct_count())
        .map(|l| {
            let z = s.project_unchecked(l, &weighted.unit);
            dot(&z, &z)
        })
        .collect();
    let mut mu = Vec::new();
    let mut mult = Vec::new();
    let mut parent = Vec::new();
    let mut discarded = Vec::new();
    for (l, &m) in all_mult.iter().enumerate() {
        if m > tol_m {
            mu.push(s.eigenvalues()[l]);
            mult.push(m);
            parent.push(l);
        } else {
            discarded.push((l, m));
        }
    }
    LocalSpectrum {
        pi: moment_products(&mu),
        mu,
        mult,
        parent,
        all_mult,
        discarded,
        rho_norm_sq: weighted.norm_sq,
        nu_norm_sq: dot(s.perron(), s.perron()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extremality {
    pub eccentricity: usize,
    pub dual_degree: usize,
}

impl Extremality {
    pub fn is_extremal(&self) -> bool {
        self.eccentricity == self.dual_degree
    }
}

/// Compares the covering radius with the dual degree. `ε_C > d_C` is
/// impossible in exact arithmetic and is reported as an inconsistency.
pub fn is_extremal(g: &Graph, s: &Spectrum, c: &VertexSet, tol_m: f64) -> Result<Extremality> {
    let dp = distance_partition(g, c)?;
    let ls = local_spectrum(s, c, tol_m)?;
    check_extremality(dp.eccentricity(), ls.dual_degree())
}

pub(crate) fn check_extremality(eccentricity: usize, dual_degree: usize) -> Result<Extremality> {
    if eccentricity > dual_degree {
        return Err(Error::Inconsistent(format!(
            "eccentricity {eccentricity} exceeds dual degree {dual_degree}; tolerances misconfigured"
        )));
    }
    Ok(Extremality {
        eccentricity,
        dual_degree,
    })
}

/// `Z_l^C`, the Lagrange polynomial on the local eigenvalues with
/// `Z_l^C(μ_h) = δ_lh`. Because the nodes are sorted descending, the
/// product `Π_{h≠l}(μ_l − μ_h)` equals `(−1)^l π_l(C)`, so this is also
/// `(−1)^l/π_l(C) · Π_{h≠l}(x − μ_h)`.
pub fn local_idempotent_polynomial(ls: &LocalSpectrum, l: usize) -> Result<Polynomial> {
    let d = ls.dual_degree();
    if l > d {
        return Err(Error::IndexOutOfRange { index: l, max: d });
    }
    let others: Vec<f64> = (0..=d).filter(|&h| h != l).map(|h| ls.mu[h]).collect();
    let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(Polynomial::from_roots(&others, sign / ls.pi[l]))
}

/// `‖Z_l^C(A) e_C − E_l e_C‖` for every local index.
pub fn idempotent_residuals(
    g: &Graph,
    s: &Spectrum,
    ls: &LocalSpectrum,
    c: &VertexSet,
) -> Result<Vec<f64>> {
    let weighted = rho_vector(s, c)?;
    (0..=ls.dual_degree())
        .map(|l| {
            let z = local_idempotent_polynomial(ls, l)?;
            let via_poly = crate::eigen::apply_polynomial(g, &z, &weighted.unit)?;
            let via_proj = s.project(ls.parent[l], &weighted.unit)?;
            Ok(norm(&crate::linalg::sub(&via_poly, &via_proj)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::spectral_decomposition;
    use crate::graph::generate;

    fn setup(name: &str, params: &[usize]) -> (Graph, Spectrum) {
        let g = generate(name, params).unwrap();
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        (g, s)
    }

    #[test]
    fn rho_of_single_vertex_in_regular_graph() {
        let (_, s) = setup("cycle", &[4]);
        let w = rho_vector(&s, &VertexSet::new([0], 4).unwrap()).unwrap();
        assert!((w.rho[0] - 1.0).abs() < 1e-13 && w.rho[1..].iter().all(|&x| x == 0.0));
        assert!((w.norm_sq - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rho_of_whole_set_is_perron() {
        let (_, s) = setup("path", &[5]);
        let w = rho_vector(&s, &VertexSet::all(5).unwrap()).unwrap();
        assert_eq!(w.rho, s.perron());
        assert!((norm(&w.unit) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn path2_unit_vector() {
        let (_, s) = setup("path", &[2]);
        let w = rho_vector(&s, &VertexSet::new([0], 2).unwrap()).unwrap();
        assert!((w.rho[0] - 1.0).abs() < 1e-15 && w.rho[1] == 0.0);
        assert!((w.unit[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn c4_local_spectrum() {
        let (_, s) = setup("cycle", &[4]);
        let ls = local_spectrum(&s, &VertexSet::new([0], 4).unwrap(), 1e-10).unwrap();
        assert_eq!(ls.dual_degree(), 2);
        for (got, want) in ls.mu().iter().zip([2.0, 0.0, -2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in ls.mult().iter().zip([0.25, 0.5, 0.25]) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in ls.pi().iter().zip([8.0, 4.0, 8.0]) {
            assert!((got - want).abs() < 1e-11);
        }
    }

    #[test]
    fn whole_set_has_trivial_local_spectrum() {
        let (_, s) = setup("petersen", &[]);
        let ls = local_spectrum(&s, &VertexSet::all(10).unwrap(), 1e-10).unwrap();
        assert_eq!(ls.dual_degree(), 0);
        assert!((ls.mult()[0] - 1.0).abs() < 1e-12);
        assert_eq!(ls.pi(), &[1.0]);
        assert_eq!(ls.discarded().len(), 2);
    }

    #[test]
    fn petersen_vertex_multiplicities() {
        let (_, s) = setup("petersen", &[]);
        let ls = local_spectrum(&s, &VertexSet::new([0], 10).unwrap(), 1e-10).unwrap();
        for (got, want) in ls.mu().iter().zip([3.0, 1.0, -2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in ls.mult().iter().zip([0.1, 0.5, 0.4]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn extremality_examples() {
        let (g, s) = setup("cycle", &[4]);
        let e = is_extremal(&g, &s, &VertexSet::new([0], 4).unwrap(), 1e-10).unwrap();
        assert_eq!((e.eccentricity, e.dual_degree), (2, 2));
        assert!(e.is_extremal());
        let e = is_extremal(&g, &s, &VertexSet::all(4).unwrap(), 1e-10).unwrap();
        assert!(e.is_extremal() && e.eccentricity == 0);

        let (g, s) = setup("hypercube", &[3]);
        let e = is_extremal(&g, &s, &VertexSet::new([0, 7], 8).unwrap(), 1e-10).unwrap();
        assert_eq!(e.eccentricity, 1);
        assert!(e.eccentricity <= e.dual_degree);
    }

    #[test]
    fn extremality_violation_is_an_error() {
        assert!(matches!(
            check_extremality(3, 2),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn c4_idempotents() {
        let (g, s) = setup("cycle", &[4]);
        let c = VertexSet::new([0], 4).unwrap();
        let ls = local_spectrum(&s, &c, 1e-10).unwrap();
        let z0 = local_idempotent_polynomial(&ls, 0).unwrap();
        for (got, want) in z0.coeffs().iter().zip([0.0, 0.25, 0.125]) {
            assert!((got - want).abs() < 1e-13);
        }
        let z1 = local_idempotent_polynomial(&ls, 1).unwrap();
        for (x, want) in [(2.0, 0.0), (0.0, 1.0), (-2.0, 0.0)] {
            assert!((z1.eval(x) - want).abs() < 1e-13);
        }
        assert!(local_idempotent_polynomial(&ls, 3).is_err());
        assert!(idempotent_residuals(&g, &s, &ls, &c)
            .unwrap()
            .iter()
            .all(|r| *r < 1e-12));
    }

    #[test]
    fn trivial_idempotent() {
        let ls = LocalSpectrum::from_parts(vec![3.0], vec![1.0], vec![0], 1.0, 1.0);
        assert_eq!(
            local_idempotent_polynomial(&ls, 0).unwrap().coeffs(),
            &[1.0]
        );
    }
}
