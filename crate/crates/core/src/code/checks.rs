use crate::eigen::{apply_polynomial, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{DistancePartition, Graph, VertexSet};
use crate::linalg::{axpy, dot, norm, sub};
use crate::local::{check_extremality, local_spectrum, rho_vector, Extremality, LocalSpectrum};
use crate::poly::{
    interpolate_on_local_spectrum, predistance_polynomials, Polynomial, PredistanceSystem,
};

use super::Margin;

/// Whether a consistency check should fail hard (the caller knows the set is a
/// completely pseudo-regular code) or only describe what it finds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Assert,
    Describe,
}

fn rho(s: &Spectrum, set: &VertexSet) -> Result<Vec<f64>> {
    Ok(rho_vector(s, set)?.rho)
}

/// `p(A) ρC` evaluated through the spectral projectors of the local
/// eigenvalues.
fn spectral_apply(s: &Spectrum, ls: &LocalSpectrum, values: &[f64], rho_c: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; rho_c.len()];
    for (l, &global) in ls.parent_indices().iter().enumerate() {
        let proj = s.project_unchecked(global, rho_c);
        axpy(&mut out, values[l], &proj);
    }
    out
}

fn extremal(dp: &DistancePartition, ls: &LocalSpectrum) -> Result<Extremality> {
    let ext = check_extremality(dp.eccentricity(), ls.dual_degree())?;
    if !ext.is_extremal() {
        return Err(Error::NotExtremal {
            eccentricity: ext.eccentricity,
            dual_degree: ext.dual_degree,
        });
    }
    Ok(ext)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PredistanceCheck {
    pub passed: bool,
    pub margin: Margin,
    /// `‖ρC_k − p_k(A)ρC‖ / ‖ρC_k‖` for `k = 0..=ε_C`.
    pub residuals: Vec<f64>,
}

/// Tests `ρC_k = p_k(A) ρC` on every subconstituent.
pub fn check_predistance(
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ps: &PredistanceSystem,
    tol_vec: f64,
) -> Result<PredistanceCheck> {
    check_extremality(dp.eccentricity(), ls.dual_degree())?;
    let rho_c = rho(s, dp.layer(0))?;
    let residuals = dp
        .layers()
        .iter()
        .enumerate()
        .map(|(k, layer)| {
            let target = rho(s, layer)?;
            let image = spectral_apply(s, ls, ps.values(k), &rho_c);
            Ok(norm(&sub(&target, &image)) / norm(&target))
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    let margin = Margin::new(worst, tol_vec);
    Ok(PredistanceCheck {
        passed: margin.passes(),
        margin,
        residuals,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollinearityCheck {
    pub passed: bool,
    pub margin: Margin,
    /// Per global eigenvalue: `α_l` when `λ_l ∈ ev_C`.
    pub alphas: Vec<Option<f64>>,
    /// Per global eigenvalue: `‖E_lρD − α_l E_lρC‖ / ‖ρD‖`, or `‖E_lρD‖/‖ρD‖`
    /// outside `ev_C`.
    pub residuals: Vec<f64>,
    /// Relative norm of the part of `ρD` outside the eigenspaces of `ev_C`.
    pub outside_norm: f64,
    /// Interpolant of the `α_l` on the local eigenvalues.
    pub candidate: Polynomial,
    /// `‖ρD − p(A)ρC‖ / ‖ρD‖` with `p` the candidate, via Horner products.
    pub residual_vector_norm: f64,
    /// `max_l |p(μ_l) − p_{d_C}(μ_l)| / max(1, |p_{d_C}(μ_l)|)`
    pub distance_to_top_predistance: f64,
}

/// Compares the projections of `ρC` and of the antipodal `ρD` on every
/// eigenspace. Requires an extremal set.
pub fn check_collinearity(
    g: &Graph,
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ps: &PredistanceSystem,
    tol_vec: f64,
) -> Result<CollinearityCheck> {
    extremal(dp, ls)?;
    let rho_c = rho(s, dp.layer(0))?;
    let rho_d = rho(s, dp.antipodal())?;
    let d_norm = norm(&rho_d);

    let mut alphas = Vec::with_capacity(s.distinct_count());
    let mut residuals = Vec::with_capacity(s.distinct_count());
    let mut outside_sq = 0.0;
    for l in 0..s.distinct_count() {
        let pd = s.project_unchecked(l, &rho_d);
        if ls.contains_global(l) {
            let pc = s.project_unchecked(l, &rho_c);
            let alpha = dot(&pd, &pc) / dot(&pc, &pc);
            let mut r = pd.clone();
            axpy(&mut r, -alpha, &pc);
            alphas.push(Some(alpha));
            residuals.push(norm(&r) / d_norm);
        } else {
            let leak = dot(&pd, &pd);
            outside_sq += leak;
            alphas.push(None);
            residuals.push(leak.sqrt() / d_norm);
        }
    }

    let values: Vec<f64> = ls
        .parent_indices()
        .iter()
        .map(|&l| alphas[l].unwrap_or(0.0))
        .collect();
    let candidate = interpolate_on_local_spectrum(&values, ls)?;
    let image = apply_polynomial(g, &candidate, &rho_c)?;
    let residual_vector_norm = norm(&sub(&rho_d, &image)) / d_norm;
    let top = ps.values(ps.dual_degree());
    let distance_to_top_predistance = values
        .iter()
        .zip(top)
        .map(|(a, p)| (a - p).abs() / p.abs().max(1.0))
        .fold(0.0, f64::max);

    let worst = residuals.iter().copied().fold(0.0, f64::max);
    let margin = Margin::new(worst, tol_vec);
    Ok(CollinearityCheck {
        passed: margin.passes(),
        margin,
        alphas,
        residuals,
        outside_norm: outside_sq.sqrt() / d_norm,
        candidate,
        residual_vector_norm,
        distance_to_top_predistance,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExcessCheck {
    pub equality: bool,
    pub margin: Margin,
    /// `‖ρD‖² / ‖ρC‖²`
    pub lhs: f64,
    /// `(1/(m_C(λ_0)² π_0²)) / Σ_l 1/(m_C(μ_l) π_l²)`
    pub rhs: f64,
}

impl ExcessCheck {
    /// `(rhs − lhs) / rhs`
    pub fn relative_gap(&self) -> f64 {
        (self.rhs - self.lhs) / self.rhs
    }
}

/// The spectral excess bound for an extremal set and its antipodal set;
/// equality characterizes completely pseudo-regular codes.
pub fn check_spectral_excess(
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    tol_ex: f64,
) -> Result<ExcessCheck> {
    extremal(dp, ls)?;
    let rho_d = rho(s, dp.antipodal())?;
    let lhs = dot(&rho_d, &rho_d) / ls.rho_norm_sq();
    let m0 = ls.mult()[0];
    let pi0 = ls.pi()[0];
    let numerator = 1.0 / (m0 * m0 * pi0 * pi0);
    let denominator: f64 = ls
        .mult()
        .iter()
        .zip(ls.pi())
        .map(|(m, p)| 1.0 / (m * p * p))
        .sum();
    let rhs = numerator / denominator;
    if lhs > rhs + tol_ex * rhs {
        return Err(Error::Inconsistent(format!(
            "spectral excess bound violated: lhs {lhs:e} > rhs {rhs:e}"
        )));
    }
    let margin = Margin::new((rhs - lhs) / rhs, tol_ex);
    Ok(ExcessCheck {
        equality: margin.passes(),
        margin,
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityProductRow {
    pub global: usize,
    pub m_c: f64,
    pub m_d: f64,
    /// `(π_0²/π_l²)·‖ρC‖²‖ρD‖²/‖ν‖⁴`
    pub bound: f64,
    /// `m_C m_D − bound`
    pub slack: f64,
    pub equality: bool,
    /// `‖z_D − proj_{z_C} z_D‖ / ‖z_D‖`, the sine of the angle between them.
    pub collinearity_residual: f64,
    pub collinear: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityProductReport {
    pub rows: Vec<MultiplicityProductRow>,
    pub ev_c_subset_ev_d: bool,
    /// Equality and collinearity flags agree on every row.
    pub equality_matches_collinearity: bool,
}

/// Multiplicity-product inequality between an extremal set and its antipodal
/// set, per local eigenvalue, with the collinearity of `z_C(μ_l)`, `z_D(μ_l)`.
pub fn check_multiplicity_products(
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    tol_m: f64,
    tol_ex: f64,
) -> Result<MultiplicityProductReport> {
    extremal(dp, ls)?;
    let ls_d = local_spectrum(s, dp.antipodal(), tol_m)?;
    let e_c = rho_vector(s, dp.layer(0))?.unit;
    let e_d = rho_vector(s, dp.antipodal())?.unit;
    let nu4 = ls.nu_norm_sq() * ls.nu_norm_sq();
    let pi0 = ls.pi()[0];

    let mut rows = Vec::new();
    let mut subset = true;
    for (l, &global) in ls.parent_indices().iter().enumerate() {
        let m_c = ls.mult()[l];
        let m_d = ls_d.all_multiplicities()[global];
        subset &= ls_d.contains_global(global);
        let ratio = pi0 / ls.pi()[l];
        let bound = ratio * ratio * ls.rho_norm_sq() * ls_d.rho_norm_sq() / nu4;
        let product = m_c * m_d;
        let slack = product - bound;
        if slack < -tol_ex * bound.max(product) {
            return Err(Error::Inconsistent(format!(
                "multiplicity product below its bound at eigenvalue {}: slack {slack:e}",
                s.eigenvalues()[global]
            )));
        }
        let z_c = s.project_unchecked(global, &e_c);
        let z_d = s.project_unchecked(global, &e_d);
        let coef = dot(&z_d, &z_c) / dot(&z_c, &z_c);
        let mut r = z_d.clone();
        axpy(&mut r, -coef, &z_c);
        let collinearity_residual = if m_d > 0.0 {
            norm(&r) / m_d.sqrt()
        } else {
            0.0
        };
        rows.push(MultiplicityProductRow {
            global,
            m_c,
            m_d,
            bound,
            slack,
            equality: slack <= tol_ex * product,
            collinearity_residual,
            collinear: collinearity_residual * collinearity_residual <= tol_ex,
        });
    }
    if !subset {
        return Err(Error::Inconsistent(
            "local eigenvalues of an extremal set missing from its antipodal set".into(),
        ));
    }
    let equality_matches_collinearity = rows.iter().all(|r| r.equality == r.collinear);
    Ok(MultiplicityProductReport {
        rows,
        ev_c_subset_ev_d: subset,
        equality_matches_collinearity,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayerSpectrum {
    pub k: usize,
    /// Global indices of `ev_{C_k}`.
    pub ev: Vec<usize>,
    pub dual_degree: usize,
    pub subset_of_ev_c: bool,
    /// `max_l |m_{C_k}(λ_l) − (‖ρC‖²/‖ρC_k‖²) p_k(λ_l)² m_C(λ_l)|`
    pub multiplicity_identity_error: f64,
    pub dual_degree_bound_ok: bool,
    /// Local indices where `p_k` vanishes.
    pub zeros: Vec<usize>,
    pub zero_bound_ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubconstituentReport {
    pub layers: Vec<LayerSpectrum>,
    /// `ev_C = ev_{C_k} ∪ ev_{C_{k+1}}` for `k < ε`.
    pub coverage: Vec<bool>,
    pub ev_c_equals_ev_d: bool,
    pub multiplicity_tolerance: f64,
}

impl SubconstituentReport {
    pub fn all_ok(&self) -> bool {
        self.ev_c_equals_ev_d
            && self.coverage.iter().all(|&c| c)
            && self.layers.iter().all(|l| {
                l.subset_of_ev_c
                    && l.dual_degree_bound_ok
                    && l.zero_bound_ok
                    && l.multiplicity_identity_error <= self.multiplicity_tolerance
            })
    }
}

/// Local spectra of the subconstituents and the relations they satisfy
/// around a completely pseudo-regular code. In [`Mode::Assert`] any failed
/// relation is an error.
pub fn subconstituent_report(
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ps: &PredistanceSystem,
    tol_m: f64,
    tol_poly: f64,
    mode: Mode,
) -> Result<SubconstituentReport> {
    check_extremality(dp.eccentricity(), ls.dual_degree())?;
    let d_c = ls.dual_degree();
    let layer_spectra = crate::par::map_slice(dp.layers(), |layer| local_spectrum(s, layer, tol_m));
    let mut layers = Vec::with_capacity(layer_spectra.len());
    for (k, lsk) in layer_spectra.into_iter().enumerate() {
        let lsk = lsk?;
        let ratio = ls.rho_norm_sq() / lsk.rho_norm_sq();
        let multiplicity_identity_error = (0..s.distinct_count())
            .map(|l| {
                let predicted = match ls.local_index_of(l) {
                    Some(local) => ratio * ps.values(k)[local].powi(2) * ls.mult()[local],
                    None => 0.0,
                };
                (lsk.all_multiplicities()[l] - predicted).abs()
            })
            .fold(0.0, f64::max);
        let zeros = ps.zeros_on_nodes(k, tol_poly);
        layers.push(LayerSpectrum {
            k,
            ev: lsk.parent_indices().to_vec(),
            dual_degree: lsk.dual_degree(),
            subset_of_ev_c: lsk.parent_indices().iter().all(|&l| ls.contains_global(l)),
            multiplicity_identity_error,
            dual_degree_bound_ok: lsk.dual_degree() >= k.max(d_c.saturating_sub(k)),
            zero_bound_ok: zeros.len() <= k.min(d_c.saturating_sub(k)),
            zeros,
        });
    }
    let coverage = (0..dp.eccentricity())
        .map(|k| {
            let mut union: Vec<usize> = layers[k]
                .ev
                .iter()
                .chain(&layers[k + 1].ev)
                .copied()
                .collect();
            union.sort_unstable();
            union.dedup();
            union == ls.parent_indices()
        })
        .collect();
    let report = SubconstituentReport {
        ev_c_equals_ev_d: layers.last().map(|l| l.ev.as_slice()) == Some(ls.parent_indices()),
        layers,
        coverage,
        multiplicity_tolerance: tol_m,
    };
    if mode == Mode::Assert && !report.all_ok() {
        return Err(Error::Inconsistent(
            "subconstituent spectra violate the relations of a completely pseudo-regular code"
                .into(),
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MdRow {
    pub global: usize,
    pub m_c: f64,
    /// `(π_0/π_l)(‖ρD‖²/‖ν‖²)/|p_{d_C}(μ_l)|`
    pub m_c_predicted: f64,
    pub m_d: f64,
    /// `(π_0/π_l)(‖ρC‖²/‖ν‖²)|p_{d_C}(μ_l)|`
    pub m_d_predicted: f64,
    pub p_top: f64,
    /// Top D-local predistance polynomial at `μ_l`.
    pub p_bar: f64,
    pub product: f64,
    /// `sign p_{d_C}(μ_l) = (−1)^l`
    pub sign_alternates: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MdReport {
    pub rows: Vec<MdRow>,
    pub max_multiplicity_error: f64,
    /// `max_l | |p̄(μ_l) p_{d_C}(μ_l)| − 1 |`
    pub max_reciprocity_error: f64,
    pub signs_alternate: bool,
    pub ok: bool,
}

/// Multiplicity formulas in terms of the top predistance polynomial and the
/// reciprocity between the C-local and D-local top polynomials. The formulas
/// are checked with `|p_{d_C}(μ_l)|`; the sign pattern `(−1)^l` is reported
/// separately.
pub fn check_md_identities(
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ps: &PredistanceSystem,
    tol_m: f64,
    tol_poly: f64,
    mode: Mode,
) -> Result<MdReport> {
    extremal(dp, ls)?;
    let ls_d = local_spectrum(s, dp.antipodal(), tol_m)?;
    if ls_d.parent_indices() != ls.parent_indices() {
        return Err(Error::Inconsistent(
            "antipodal set has a different local spectrum; reciprocity undefined".into(),
        ));
    }
    let ps_d = predistance_polynomials(&ls_d, tol_poly)?;
    let d = ls.dual_degree();
    let pi0 = ls.pi()[0];
    let nu = ls.nu_norm_sq();

    let rows: Vec<MdRow> = (0..=d)
        .map(|l| {
            let p_top = ps.values(d)[l];
            let p_bar = ps_d.values(d)[l];
            let ratio = pi0 / ls.pi()[l];
            let expected_sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
            MdRow {
                global: ls.parent_indices()[l],
                m_c: ls.mult()[l],
                m_c_predicted: ratio * ls_d.rho_norm_sq() / nu / p_top.abs(),
                m_d: ls_d.mult()[l],
                m_d_predicted: ratio * ls.rho_norm_sq() / nu * p_top.abs(),
                p_top,
                p_bar,
                product: p_top * p_bar,
                sign_alternates: p_top.signum() == expected_sign && p_bar.signum() == expected_sign,
            }
        })
        .collect();

    let max_multiplicity_error = rows
        .iter()
        .map(|r| {
            (r.m_c - r.m_c_predicted)
                .abs()
                .max((r.m_d - r.m_d_predicted).abs())
        })
        .fold(0.0, f64::max);
    let max_reciprocity_error = rows
        .iter()
        .map(|r| (r.product.abs() - 1.0).abs())
        .fold(0.0, f64::max);
    let signs_alternate = rows.iter().all(|r| r.sign_alternates);
    let ok =
        max_multiplicity_error <= tol_m && max_reciprocity_error <= tol_poly && signs_alternate;
    if mode == Mode::Assert && !ok {
        return Err(Error::Inconsistent(format!(
            "multiplicity/reciprocity identities fail (multiplicity error {max_multiplicity_error:e}, reciprocity error {max_reciprocity_error:e})"
        )));
    }
    Ok(MdReport {
        rows,
        max_multiplicity_error,
        max_reciprocity_error,
        signs_alternate,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::spectral_decomposition;
    use crate::graph::{distance_partition, generate};

    struct Fixture {
        g: Graph,
        s: Spectrum,
        dp: DistancePartition,
        ls: LocalSpectrum,
        ps: PredistanceSystem,
    }

    fn fixture(name: &str, params: &[usize], set: &[usize]) -> Fixture {
        let g = generate(name, params).unwrap();
        let s = spectral_decomposition(&g, 1e-8).unwrap();
        let c = VertexSet::new(set.to_vec(), g.n()).unwrap();
        let dp = distance_partition(&g, &c).unwrap();
        let ls = local_spectrum(&s, &c, 1e-10).unwrap();
        let ps = predistance_polynomials(&ls, 1e-8).unwrap();
        Fixture { g, s, dp, ls, ps }
    }

    #[test]
    fn c4_predistance() {
        let f = fixture("cycle", &[4], &[0]);
        let t = check_predistance(&f.s, &f.dp, &f.ls, &f.ps, 1e-8).unwrap();
        assert!(t.passed);
        assert_eq!(t.residuals.len(), 3);
        assert!(t.residuals.iter().all(|r| *r < 1e-12));
    }

    #[test]
    fn c4_collinearity() {
        let f = fixture("cycle", &[4], &[0]);
        let col = check_collinearity(&f.g, &f.s, &f.dp, &f.ls, &f.ps, 1e-8).unwrap();
        assert!(col.passed);
        let alphas: Vec<f64> = col.alphas.iter().map(|a| a.unwrap()).collect();
        for (a, w) in alphas.iter().zip([1.0, -1.0, 1.0]) {
            assert!((a - w).abs() < 1e-12);
        }
        for (c, w) in col.candidate.coeffs().iter().zip([-1.0, 0.0, 0.5]) {
            assert!((c - w).abs() < 1e-12);
        }
        assert!(col.residual_vector_norm < 1e-12);
        assert!(col.distance_to_top_predistance < 1e-12);
    }

    #[test]
    fn c6_alpha_signs_alternate() {
        let f = fixture("cycle", &[6], &[0]);
        let col = check_collinearity(&f.g, &f.s, &f.dp, &f.ls, &f.ps, 1e-8).unwrap();
        assert!(col.passed);
        for (l, &global) in f.ls.parent_indices().iter().enumerate() {
            let alpha = col.alphas[global].unwrap();
            assert_eq!(alpha.signum(), if l.is_multiple_of(2) { 1.0 } else { -1.0 });
        }
    }

    #[test]
    fn c4_excess() {
        let f = fixture("cycle", &[4], &[0]);
        let ex = check_spectral_excess(&f.s, &f.dp, &f.ls, 1e-8).unwrap();
        assert!((ex.lhs - 1.0).abs() < 1e-12 && (ex.rhs - 1.0).abs() < 1e-12);
        assert!(ex.equality);
    }

    #[test]
    fn c4_multiplicity_products_are_tight() {
        let f = fixture("cycle", &[4], &[0]);
        let rep = check_multiplicity_products(&f.s, &f.dp, &f.ls, 1e-10, 1e-8).unwrap();
        assert!(rep.ev_c_subset_ev_d && rep.equality_matches_collinearity);
        for row in &rep.rows {
            assert!(row.slack.abs() < 1e-12);
            assert!(row.equality && row.collinear);
        }
        assert!((rep.rows[1].m_c * rep.rows[1].m_d - 0.25).abs() < 1e-12);
    }

    #[test]
    fn c4_subconstituents() {
        let f = fixture("cycle", &[4], &[0]);
        let rep =
            subconstituent_report(&f.s, &f.dp, &f.ls, &f.ps, 1e-10, 1e-8, Mode::Assert).unwrap();
        assert_eq!(rep.layers[1].ev, vec![0, 2]);
        assert_eq!(rep.layers[1].dual_degree, 1);
        assert_eq!(rep.layers[0].ev, vec![0, 1, 2]);
        assert!(rep.ev_c_equals_ev_d && rep.all_ok());
    }

    #[test]
    fn c4_md_identities() {
        let f = fixture("cycle", &[4], &[0]);
        let rep =
            check_md_identities(&f.s, &f.dp, &f.ls, &f.ps, 1e-10, 1e-8, Mode::Assert).unwrap();
        assert!(rep.ok && rep.signs_alternate);
        let mid = &rep.rows[1];
        assert!((mid.m_c_predicted - 0.5).abs() < 1e-12);
        assert!((mid.p_top + 1.0).abs() < 1e-12);
        assert!((mid.product - 1.0).abs() < 1e-12);
    }

    #[test]
    fn whole_set_checks_collapse() {
        let f = fixture("petersen", &[], &(0..10).collect::<Vec<_>>());
        let col = check_collinearity(&f.g, &f.s, &f.dp, &f.ls, &f.ps, 1e-8).unwrap();
        assert!(col.passed);
        assert_eq!(col.candidate.coeffs().len(), 1);
        assert!((col.candidate.coeffs()[0] - 1.0).abs() < 1e-12);
        let ex = check_spectral_excess(&f.s, &f.dp, &f.ls, 1e-8).unwrap();
        assert!((ex.lhs - 1.0).abs() < 1e-12 && (ex.rhs - 1.0).abs() < 1e-12);
        let md = check_md_identities(&f.s, &f.dp, &f.ls, &f.ps, 1e-10, 1e-8, Mode::Assert).unwrap();
        assert!(md.ok);
    }

    #[test]
    fn non_extremal_sets_are_refused() {
        // {0, 2} in C6: covering radius 2, dual degree 3
        let f = fixture("cycle", &[6], &[0, 2]);
        assert_eq!(f.dp.eccentricity(), 2);
        assert!(f.ls.dual_degree() > 2);
        assert!(matches!(
            check_collinearity(&f.g, &f.s, &f.dp, &f.ls, &f.ps, 1e-8),
            Err(Error::NotExtremal { .. })
        ));
        assert!(matches!(
            check_spectral_excess(&f.s, &f.dp, &f.ls, 1e-8),
            Err(Error::NotExtremal { .. })
        ));
        let t = check_predistance(&f.s, &f.dp, &f.ls, &f.ps, 1e-8).unwrap();
        assert!(!t.passed);
        assert!(t.residuals[0] < 1e-12);
    }

    #[test]
    fn assert_mode_rejects_non_codes() {
        let f = fixture("hypercube", &[3], &[0, 3]);
        let rep =
            subconstituent_report(&f.s, &f.dp, &f.ls, &f.ps, 1e-10, 1e-8, Mode::Describe).unwrap();
        if !rep.all_ok() {
            assert!(
                subconstituent_report(&f.s, &f.dp, &f.ls, &f.ps, 1e-10, 1e-8, Mode::Assert)
                    .is_err()
            );
        }
    }
}
