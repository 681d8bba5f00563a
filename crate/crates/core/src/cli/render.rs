//! JSON and text rendering. JSON floats carry 17 significant digits in
//! scientific notation; non-finite values become `null`.

use std::fmt::Write as _;

use serde_json::{json, Map, Number, Value};

use crate::batch::Instance;
use crate::code::{Analysis, Margin, Overall};
use crate::config::Config;
use crate::eigen::Spectrum;
use crate::error::Result;
use crate::graph::{DistancePartition, Graph, VertexSet};
use crate::local::{Extremality, LocalSpectrum};
use crate::poly::{Polynomial, PredistanceSystem};

fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let text = format!("{x:.16e}");
    Value::Number(
        text.parse::<Number>()
            .expect("formatted float is valid JSON"),
    )
}

fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().copied().map(num).collect())
}

fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

fn finish(map: Map<String, Value>) -> String {
    let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
    out.push('\n');
    out
}

fn graph_json(g: &Graph, source: &str) -> Value {
    json!({
        "source": source,
        "n": g.n(),
        "edges": g.edges().len(),
        "regular": g.is_regular(),
    })
}

fn set_json(c: &VertexSet) -> Value {
    json!({ "members": c.members(), "size": c.len() })
}

fn config_json(cfg: &Config) -> Value {
    json!({
        "tol_eig": num(cfg.tol_eig),
        "tol_proj": num(cfg.tol_proj),
        "tol_m": num(cfg.tol_m),
        "tol_poly": num(cfg.tol_poly),
        "tol_coef": num(cfg.tol_coef),
        "tol_vec": num(cfg.tol_vec),
        "tol_int": num(cfg.tol_int),
        "tol_ex": num(cfg.tol_ex),
        "seed": cfg.seed,
    })
}

fn spectrum_value(s: &Spectrum) -> Value {
    json!({
        "eigenvalues": nums(s.eigenvalues()),
        "multiplicities": s.multiplicities(),
        "pi": nums(s.pi()),
        "perron": nums(s.perron()),
        "perron_norm_sq": num(s.perron_norm_sq()),
        "cluster_gap": num(s.cluster_gap()),
        "sweeps": s.sweeps(),
    })
}

fn local_value(ls: &LocalSpectrum, ext: &Extremality) -> Value {
    let discarded: Vec<Value> = ls
        .discarded()
        .iter()
        .map(|&(l, m)| json!({ "index": l, "multiplicity": num(m) }))
        .collect();
    json!({
        "rho_norm_sq": num(ls.rho_norm_sq()),
        "nu_norm_sq": num(ls.nu_norm_sq()),
        "eigenvalues": nums(ls.mu()),
        "global_indices": ls.parent_indices(),
        "multiplicities": nums(ls.mult()),
        "pi": nums(ls.pi()),
        "dual_degree": ls.dual_degree(),
        "eccentricity": ext.eccentricity,
        "extremal": ext.is_extremal(),
        "discarded": discarded,
    })
}

fn partition_value(dp: &DistancePartition) -> Value {
    let layers: Vec<&[usize]> = dp.layers().iter().map(VertexSet::members).collect();
    let sizes: Vec<usize> = dp.layers().iter().map(VertexSet::len).collect();
    json!({ "eccentricity": dp.eccentricity(), "sizes": sizes, "layers": layers })
}

fn polys_value(ps: &PredistanceSystem, h: &Polynomial) -> Value {
    let polys: Vec<Value> = (0..=ps.dual_degree())
        .map(|k| {
            json!({
                "degree": k,
                "coeffs": nums(ps.poly(k).coeffs()),
                "values": nums(ps.values(k)),
                "at_top": num(ps.at_top(k)),
            })
        })
        .collect();
    json!({
        "predistance": polys,
        "recurrence": { "a": nums(ps.rec_a()), "b": nums(ps.rec_b()), "c": nums(ps.rec_c()) },
        "orthogonality_defect": num(ps.orthogonality_defect()),
        "recurrence_residuals": nums(&ps.recurrence_residuals()),
        "hoffman": nums(h.coeffs()),
    })
}

fn margin_value(m: &Margin) -> Value {
    json!({
        "value": num(m.value),
        "threshold": num(m.threshold),
        "ratio": num(m.ratio()),
        "passes": m.passes(),
        "decisive": m.is_decisive(),
    })
}

pub(super) fn spectrum_json(g: &Graph, source: &str, s: &Spectrum, cfg: &Config) -> String {
    let mut m = Map::new();
    m.insert("graph".into(), graph_json(g, source));
    m.insert("spectrum".into(), spectrum_value(s));
    m.insert("config".into(), config_json(cfg));
    finish(m)
}

#[allow(clippy::too_many_arguments)]
pub(super) fn local_json(
    g: &Graph,
    source: &str,
    c: &VertexSet,
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ext: &Extremality,
    cfg: &Config,
) -> String {
    let mut m = Map::new();
    m.insert("graph".into(), graph_json(g, source));
    m.insert("set".into(), set_json(c));
    m.insert("spectrum".into(), spectrum_value(s));
    m.insert("local_spectrum".into(), local_value(ls, ext));
    m.insert("partition".into(), partition_value(dp));
    m.insert("config".into(), config_json(cfg));
    finish(m)
}

pub(super) fn polys_json(
    g: &Graph,
    source: &str,
    c: &VertexSet,
    ls: &LocalSpectrum,
    ps: &PredistanceSystem,
    h: &Polynomial,
    cfg: &Config,
) -> String {
    let mut m = Map::new();
    m.insert("graph".into(), graph_json(g, source));
    m.insert("set".into(), set_json(c));
    m.insert(
        "local_spectrum".into(),
        json!({
            "eigenvalues": nums(ls.mu()),
            "multiplicities": nums(ls.mult()),
            "dual_degree": ls.dual_degree(),
        }),
    );
    m.insert("polynomials".into(), polys_value(ps, h));
    m.insert("config".into(), config_json(cfg));
    finish(m)
}

pub(super) fn check_json(g: &Graph, source: &str, a: &Analysis, cfg: &Config) -> String {
    let r = &a.report;
    let mut m = Map::new();
    m.insert("graph".into(), graph_json(g, source));
    m.insert("set".into(), set_json(&a.set));
    m.insert("spectrum".into(), spectrum_value(&a.spectrum));
    m.insert(
        "local_spectrum".into(),
        local_value(&a.local, &r.extremality),
    );
    m.insert("partition".into(), partition_value(&a.partition));
    m.insert("polynomials".into(), polys_value(&a.system, &a.hoffman));

    let id = &r.intersection;
    let tests: Vec<Value> = r
        .verdicts
        .iter()
        .map(|v| json!({ "test": v.kind.name(), "cprc": v.cprc, "decisive": v.decisive() }))
        .collect();
    let multiplicity_products = r.multiplicity_products.as_ref().map(|p| {
        let rows: Vec<Value> = p
            .rows
            .iter()
            .map(|row| {
                json!({
                    "index": row.global,
                    "m_c": num(row.m_c),
                    "m_d": num(row.m_d),
                    "bound": num(row.bound),
                    "slack": num(row.slack),
                    "equality": row.equality,
                    "collinear": row.collinear,
                })
            })
            .collect();
        json!({ "rows": rows, "ev_c_subset_ev_d": p.ev_c_subset_ev_d, "consistent": p.equality_matches_collinearity })
    });
    let sub = &r.subconstituents;
    let layers: Vec<Value> = sub
        .layers
        .iter()
        .map(|l| {
            json!({
                "k": l.k,
                "eigenvalue_indices": l.ev,
                "dual_degree": l.dual_degree,
                "subset_of_ev_c": l.subset_of_ev_c,
                "multiplicity_identity_error": num(l.multiplicity_identity_error),
                "dual_degree_bound_ok": l.dual_degree_bound_ok,
                "zero_bound_ok": l.zero_bound_ok,
            })
        })
        .collect();
    let md = r.md.as_ref().map(|md| {
        let rows: Vec<Value> = md
            .rows
            .iter()
            .map(|row| {
                json!({
                    "index": row.global,
                    "m_c": num(row.m_c),
                    "m_c_predicted": num(row.m_c_predicted),
                    "m_d": num(row.m_d),
                    "m_d_predicted": num(row.m_d_predicted),
                    "p_top": num(row.p_top),
                    "p_bar": num(row.p_bar),
                    "product": num(row.product),
                    "sign_alternates": row.sign_alternates,
                })
            })
            .collect();
        json!({
            "rows": rows,
            "max_multiplicity_error": num(md.max_multiplicity_error),
            "max_reciprocity_error": num(md.max_reciprocity_error),
            "signs_alternate": md.signs_alternate,
            "ok": md.ok,
        })
    });
    m.insert(
        "verdicts".into(),
        json!({
            "overall": r.overall.name(),
            "exit_code": r.overall.exit_code(),
            "tests": tests,
            "skipped": r.skipped,
            "notes": r.notes,
            "intersection": {
                "c": nums(&id.layer_c),
                "a": nums(&id.layer_a),
                "b": nums(&id.layer_b),
                "spread": nums(&id.spreads.iter().map(|s| s.max()).collect::<Vec<_>>()),
                "sum_defect": num(id.sum_defect),
            },
            "multiplicity_products": multiplicity_products,
            "subconstituents": {
                "layers": layers,
                "coverage": sub.coverage,
                "ev_c_equals_ev_d": sub.ev_c_equals_ev_d,
                "ok": sub.all_ok(),
            },
            "md_identities": md,
            "recurrence_vs_intersection": opt_num(r.recurrence_vs_intersection),
            "hoffman_residual": num(r.hoffman_residual),
        }),
    );

    let mut margins = Map::new();
    for v in &r.verdicts {
        margins.insert(v.kind.name().into(), margin_value(&v.margin));
    }
    margins.insert(
        "predistance_residuals".into(),
        nums(&r.predistance.residuals),
    );
    if let Some(col) = &r.collinearity {
        margins.insert("collinearity_residuals".into(), nums(&col.residuals));
        margins.insert(
            "collinearity_alphas".into(),
            Value::Array(col.alphas.iter().copied().map(opt_num).collect()),
        );
        margins.insert("collinearity_outside_norm".into(), num(col.outside_norm));
    }
    if let Some(ex) = &r.excess {
        margins.insert("excess_lhs".into(), num(ex.lhs));
        margins.insert("excess_rhs".into(), num(ex.rhs));
    }
    m.insert("margins".into(), Value::Object(margins));
    m.insert("config".into(), config_json(cfg));
    finish(m)
}

fn join(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x:.10}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub(super) fn spectrum_text(g: &Graph, source: &str, s: &Spectrum) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph {source}: n = {}, edges = {}",
        g.n(),
        g.edges().len()
    );
    for (l, (&lam, &mult)) in s.eigenvalues().iter().zip(s.multiplicities()).enumerate() {
        let _ = writeln!(
            out,
            "  λ_{l} = {lam:.10}  multiplicity {mult}  π = {:.10}",
            s.pi()[l]
        );
    }
    let _ = writeln!(out, "perron: [{}]", join(s.perron()));
    out
}

pub(super) fn local_text(
    c: &VertexSet,
    s: &Spectrum,
    dp: &DistancePartition,
    ls: &LocalSpectrum,
    ext: &Extremality,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "set {c} (size {})", c.len());
    for (i, &l) in ls.parent_indices().iter().enumerate() {
        let _ = writeln!(
            out,
            "  λ_{l} = {:.10}  m_C = {:.10}",
            s.eigenvalues()[l],
            ls.mult()[i]
        );
    }
    let _ = writeln!(
        out,
        "dual degree {}, eccentricity {}, extremal {}",
        ext.dual_degree,
        ext.eccentricity,
        ext.is_extremal()
    );
    let sizes: Vec<String> = dp.layers().iter().map(|l| l.len().to_string()).collect();
    let _ = writeln!(out, "layer sizes: {}", sizes.join(" "));
    out
}

pub(super) fn polys_text(ls: &LocalSpectrum, ps: &PredistanceSystem, h: &Polynomial) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "local eigenvalues: [{}]", join(ls.mu()));
    for k in 0..=ps.dual_degree() {
        let _ = writeln!(out, "  p_{k}: [{}]", join(ps.poly(k).coeffs()));
    }
    let _ = writeln!(out, "a: [{}]", join(ps.rec_a()));
    let _ = writeln!(out, "b: [{}]", join(ps.rec_b()));
    let _ = writeln!(out, "c: [{}]", join(ps.rec_c()));
    let _ = writeln!(out, "hoffman: [{}]", join(h.coeffs()));
    out
}

pub(super) fn check_text(a: &Analysis) -> String {
    let r = &a.report;
    let mut out = String::new();
    let _ = writeln!(out, "set {} : {}", a.set, r.overall.name());
    for v in &r.verdicts {
        let _ = writeln!(
            out,
            "  {:<16} {:<5} value {:.3e} threshold {:.1e}{}",
            v.kind.name(),
            v.cprc,
            v.margin.value,
            v.margin.threshold,
            if v.decisive() { "" } else { "  (within band)" }
        );
    }
    if let Some(reason) = &r.skipped {
        let _ = writeln!(out, "  skipped: {reason}");
    }
    for note in &r.notes {
        let _ = writeln!(out, "  note: {note}");
    }
    out
}

/// Tallies for `sweep`.
#[derive(Debug, Default)]
pub(super) struct SweepSummary {
    instances: usize,
    errors: Vec<(usize, String)>,
    codes: usize,
    extremal: usize,
    decisive: usize,
    disagreements: Vec<usize>,
    inconsistent: Vec<usize>,
}

impl SweepSummary {
    pub(super) fn collect(corpus: &[Instance], results: &[Result<Analysis>]) -> Self {
        let mut s = SweepSummary {
            instances: corpus.len(),
            ..Default::default()
        };
        for (i, res) in results.iter().enumerate() {
            match res {
                Err(e) => s.errors.push((i, e.to_string())),
                Ok(a) => {
                    let r = &a.report;
                    s.codes += usize::from(r.overall == Overall::Cprc);
                    s.extremal += usize::from(r.extremality.is_extremal());
                    match r.oracle_agreement() {
                        Some(true) => s.decisive += 1,
                        Some(false) => {
                            s.decisive += 1;
                            s.disagreements.push(i);
                        }
                        None => {}
                    }
                    if r.overall == Overall::Inconsistent {
                        s.inconsistent.push(i);
                    }
                }
            }
        }
        s
    }

    pub(super) fn clean(&self) -> bool {
        self.errors.is_empty() && self.disagreements.is_empty() && self.inconsistent.is_empty()
    }

    pub(super) fn json(&self, cfg: &Config, count: usize, max_n: usize) -> String {
        let errors: Vec<Value> = self
            .errors
            .iter()
            .map(|(i, e)| json!({ "instance": i, "error": e }))
            .collect();
        let mut m = Map::new();
        m.insert(
            "corpus".into(),
            json!({ "count": count, "max_n": max_n, "seed": cfg.seed }),
        );
        m.insert(
            "summary".into(),
            json!({
                "instances": self.instances,
                "cprc": self.codes,
                "extremal": self.extremal,
                "decisive": self.decisive,
                "disagreements": self.disagreements,
                "inconsistent": self.inconsistent,
                "errors": errors,
            }),
        );
        m.insert("config".into(), config_json(cfg));
        finish(m)
    }

    pub(super) fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} instances: {} codes, {} extremal, {} fully decisive",
            self.instances, self.codes, self.extremal, self.decisive
        );
        let _ = writeln!(out, "disagreements: {:?}", self.disagreements);
        let _ = writeln!(out, "inconsistent: {:?}", self.inconsistent);
        for (i, e) in &self.errors {
            let _ = writeln!(out, "error in instance {i}: {e}");
        }
        out
    }
}
