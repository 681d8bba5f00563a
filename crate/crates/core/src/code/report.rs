use crate::config::Config;
use crate::eigen::{apply_polynomial, spectral_decomposition, Spectrum};
use crate::error::{Error, Result};
use crate::graph::{distance_partition, DistancePartition, Graph, VertexSet};
use crate::linalg::{norm, sub};
use crate::local::{check_extremality, local_spectrum, rho_vector, Extremality, LocalSpectrum};
use crate::poly::{hoffman_polynomial, predistance_polynomials, Polynomial, PredistanceSystem};

use super::checks::{
    check_collinearity, check_md_identities, check_multiplicity_products, check_predistance,
    check_spectral_excess, subconstituent_report, CollinearityCheck, ExcessCheck, MdReport, Mode,
    MultiplicityProductReport, PredistanceCheck, SubconstituentReport,
};
use super::intersection::{
    check_combinatorial, intersection_functions, CombinatorialCheck, IntersectionData,
};
use super::Margin;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestKind {
    Combinatorial,
    Predistance,
    Collinearity,
    SpectralExcess,
}

impl TestKind {
    pub fn name(&self) -> &'static str {
        match self {
            TestKind::Combinatorial => "combinatorial",
            TestKind::Predistance => "predistance",
            TestKind::Collinearity => "collinearity",
            TestKind::SpectralExcess => "spectral_excess",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestVerdict {
    pub kind: TestKind,
    /// `true` means "is a completely pseudo-regular code".
    pub cprc: bool,
    pub margin: Margin,
}

impl TestVerdict {
    pub fn decisive(&self) -> bool {
        self.margin.is_decisive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    Cprc,
    NotCprc,
    /// Decisive verdicts disagree, or a relation guaranteed for codes failed.
    Inconsistent,
    /// Verdicts disagree but only inside the tolerance bands.
    Indecisive,
}

impl Overall {
    pub fn name(&self) -> &'static str {
        match self {
            Overall::Cprc => "CPRC",
            Overall::NotCprc => "NOT_CPRC",
            Overall::Inconsistent => "INCONSISTENT",
            Overall::Indecisive => "INDECISIVE",
        }
    }

    /// Process exit code: 0 code, 1 not a code, 2 inconsistent or undecided.
    pub fn exit_code(&self) -> i32 {
        match self {
            Overall::Cprc => 0,
            Overall::NotCprc => 1,
            Overall::Inconsistent | Overall::Indecisive => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CodeReport {
    pub extremality: Extremality,
    pub intersection: IntersectionData,
    pub combinatorial: CombinatorialCheck,
    pub predistance: PredistanceCheck,
    pub collinearity: Option<CollinearityCheck>,
    pub excess: Option<ExcessCheck>,
    pub multiplicity_products: Option<MultiplicityProductReport>,
    pub subconstituents: SubconstituentReport,
    pub md: Option<MdReport>,
    /// `max |rec − intersection|` over the recurrence triples, on codes.
    pub recurrence_vs_intersection: Option<f64>,
    /// `‖H_C(A)ρC − ν‖ / ‖ν‖`
    pub hoffman_residual: f64,
    pub verdicts: Vec<TestVerdict>,
    pub skipped: Option<String>,
    pub notes: Vec<String>,
    pub overall: Overall,
}

/// Everything computed for one `(graph, set)` pair.
impl CodeReport {
    /// `None` unless every verdict is decisive; otherwise whether each
    /// spectral verdict matches the combinatorial one.
    pub fn oracle_agreement(&self) -> Option<bool> {
        if !self.verdicts.iter().all(TestVerdict::decisive) {
            return None;
        }
        let oracle = self.verdicts[0].cprc;
        Some(self.verdicts[1..].iter().all(|v| v.cprc == oracle))
    }
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub set: VertexSet,
    pub spectrum: Spectrum,
    pub partition: DistancePartition,
    pub local: LocalSpectrum,
    pub system: PredistanceSystem,
    pub hoffman: Polynomial,
    pub report: CodeReport,
}

/// Runs the full pipeline on `c`. Non-extremal sets get the combinatorial and
/// predistance tests only; extremal sets also get the collinearity and
/// spectral-excess tests plus the consistency checks.
pub fn analyze(g: &Graph, c: &VertexSet, cfg: &Config) -> Result<Analysis> {
    cfg.validate()?;
    let s = spectral_decomposition(g, cfg.tol_eig)?;
    analyze_with_spectrum(g, &s, c, cfg)
}

pub(crate) fn analyze_with_spectrum(
    g: &Graph,
    s: &Spectrum,
    c: &VertexSet,
    cfg: &Config,
) -> Result<Analysis> {
    let dp = distance_partition(g, c)?;
    let ls = local_spectrum(s, c, cfg.tol_m)?;
    let extremality = check_extremality(dp.eccentricity(), ls.dual_degree())?;
    let ps = predistance_polynomials(&ls, cfg.tol_poly)?;
    let hoffman = hoffman_polynomial(&ls, ls.nu_norm_sq(), ls.rho_norm_sq());
    let rho_c = rho_vector(s, c)?.rho;
    let hoffman_image = apply_polynomial(g, &hoffman, &rho_c)?;
    let hoffman_residual = norm(&sub(&hoffman_image, s.perron())) / ls.nu_norm_sq().sqrt();

    let intersection = intersection_functions(g, s, &dp);
    let combinatorial = check_combinatorial(&intersection, cfg.tol_int);
    let predistance = check_predistance(s, &dp, &ls, &ps, cfg.tol_vec)?;

    let mut notes = Vec::new();
    let mut inconsistent = false;
    let mut verdicts = vec![
        TestVerdict {
            kind: TestKind::Combinatorial,
            cprc: combinatorial.passed,
            margin: combinatorial.margin,
        },
        TestVerdict {
            kind: TestKind::Predistance,
            cprc: predistance.passed,
            margin: predistance.margin,
        },
    ];

    let subconstituents =
        subconstituent_report(s, &dp, &ls, &ps, cfg.tol_m, cfg.tol_poly, Mode::Describe)?;

    let (mut collinearity, mut excess, mut multiplicity_products, mut md, mut skipped) =
        (None, None, None, None, None);
    if extremality.is_extremal() {
        let col = check_collinearity(g, s, &dp, &ls, &ps, cfg.tol_vec)?;
        verdicts.push(TestVerdict {
            kind: TestKind::Collinearity,
            cprc: col.passed,
            margin: col.margin,
        });
        collinearity = Some(col);
        match check_spectral_excess(s, &dp, &ls, cfg.tol_ex) {
            Ok(ex) => {
                verdicts.push(TestVerdict {
                    kind: TestKind::SpectralExcess,
                    cprc: ex.equality,
                    margin: ex.margin,
                });
                excess = Some(ex);
            }
            Err(Error::Inconsistent(msg)) => {
                inconsistent = true;
                notes.push(msg);
            }
            Err(e) => return Err(e),
        }
        match check_multiplicity_products(s, &dp, &ls, cfg.tol_m, cfg.tol_ex) {
            Ok(rep) => multiplicity_products = Some(rep),
            Err(Error::Inconsistent(msg)) => {
                inconsistent = true;
                notes.push(msg);
            }
            Err(e) => return Err(e),
        }
    } else {
        skipped = Some(format!(
            "set is not extremal (eccentricity {} < dual degree {}); collinearity and spectral-excess tests need an extremal set",
            extremality.eccentricity, extremality.dual_degree
        ));
    }

    let decisive: Vec<&TestVerdict> = verdicts.iter().filter(|v| v.decisive()).collect();
    if decisive.windows(2).any(|w| w[0].cprc != w[1].cprc) {
        inconsistent = true;
        notes.push("decisive verdicts disagree".into());
    }
    let unanimous = verdicts.windows(2).all(|w| w[0].cprc == w[1].cprc);
    let is_code = unanimous && verdicts[0].cprc;

    let mut recurrence_vs_intersection = None;
    if is_code {
        if !extremality.is_extremal() {
            inconsistent = true;
            notes.push("completely pseudo-regular verdict on a non-extremal set".into());
        } else {
            let rep =
                check_md_identities(s, &dp, &ls, &ps, cfg.tol_m, cfg.tol_poly, Mode::Describe);
            match rep {
                Ok(rep) => {
                    if !rep.ok {
                        inconsistent = true;
                        notes.push("multiplicity/reciprocity identities fail on a code".into());
                    }
                    md = Some(rep);
                }
                Err(Error::Inconsistent(msg)) => {
                    inconsistent = true;
                    notes.push(msg);
                }
                Err(e) => return Err(e),
            }
            if !subconstituents.all_ok() {
                inconsistent = true;
                notes.push("subconstituent spectra violate the relations of a code".into());
            }
            let diff = recurrence_mismatch(&ps, &intersection);
            if diff > cfg.tol_poly * intersection.lambda0.max(1.0) {
                inconsistent = true;
                notes.push(format!(
                    "recurrence coefficients differ from intersection numbers by {diff:e}"
                ));
            }
            recurrence_vs_intersection = Some(diff);
        }
    }

    let overall = if inconsistent {
        Overall::Inconsistent
    } else if unanimous {
        if is_code {
            Overall::Cprc
        } else {
            Overall::NotCprc
        }
    } else {
        Overall::Indecisive
    };

    let report = CodeReport {
        extremality,
        intersection,
        combinatorial,
        predistance,
        collinearity,
        excess,
        multiplicity_products,
        subconstituents,
        md,
        recurrence_vs_intersection,
        hoffman_residual,
        verdicts,
        skipped,
        notes,
        overall,
    };
    Ok(Analysis {
        set: c.clone(),
        spectrum: s.clone(),
        partition: dp,
        local: ls,
        system: ps,
        hoffman,
        report,
    })
}

fn recurrence_mismatch(ps: &PredistanceSystem, id: &IntersectionData) -> f64 {
    let d = ps.dual_degree();
    let mut worst: f64 = 0.0;
    for k in 0..=d {
        worst = worst.max((ps.rec_a()[k] - id.layer_a[k]).abs());
        worst = worst.max((ps.rec_b()[k] - id.layer_b[k]).abs());
        worst = worst.max((ps.rec_c()[k] - id.layer_c[k]).abs());
    }
    worst
}
