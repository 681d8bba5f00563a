//! ν-weighted intersection functions and the combinatorial test, which is a
//! direct transcription of the definition and uses no spectral numerics
//! beyond the Perron vector.

use crate::eigen::Spectrum;
use crate::graph::{DistancePartition, Graph};

use super::Margin;

/// Spread (max − min) of one function over one layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerSpread {
    pub c: f64,
    pub a: f64,
    pub b: f64,
}

impl LayerSpread {
    pub fn max(&self) -> f64 {
        self.c.max(self.a).max(self.b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionData {
    pub c: Vec<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    /// Layer mean of each function, in layer order.
    pub layer_c: Vec<f64>,
    pub layer_a: Vec<f64>,
    pub layer_b: Vec<f64>,
    pub spreads: Vec<LayerSpread>,
    /// `max_i |c(i) + a(i) + b(i) − λ_0|`
    pub sum_defect: f64,
    pub lambda0: f64,
}

impl IntersectionData {
    /// `(c_k, a_k, b_k)` arrays when every layer is constant within `tol`
    /// (absolute).
    pub fn array(&self, tol: f64) -> Option<(Vec<f64>, Vec<f64>, Vec<f64>)> {
        self.spreads.iter().all(|s| s.max() <= tol).then(|| {
            (
                self.layer_c.clone(),
                self.layer_a.clone(),
                self.layer_b.clone(),
            )
        })
    }
}

pub fn intersection_functions(g: &Graph, s: &Spectrum, dp: &DistancePartition) -> IntersectionData {
    let nu = s.perron();
    let dist = dp.distances();
    let n = g.n();
    let (mut c, mut a, mut b) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    for i in 0..n {
        let k = dist[i];
        for &j in g.neighbors(i) {
            let w = nu[j] / nu[i];
            match dist[j] {
                dj if dj + 1 == k => c[i] += w,
                dj if dj == k => a[i] += w,
                _ => b[i] += w,
            }
        }
    }

    let layers = dp.layers();
    let mut spreads = Vec::with_capacity(layers.len());
    let (mut layer_c, mut layer_a, mut layer_b) = (Vec::new(), Vec::new(), Vec::new());
    for layer in layers {
        let stats = |f: &[f64]| {
            let (mut lo, mut hi, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
            for &i in layer.members() {
                lo = lo.min(f[i]);
                hi = hi.max(f[i]);
                sum += f[i];
            }
            (hi - lo, sum / layer.len() as f64)
        };
        let (sc, mc) = stats(&c);
        let (sa, ma) = stats(&a);
        let (sb, mb) = stats(&b);
        spreads.push(LayerSpread {
            c: sc,
            a: sa,
            b: sb,
        });
        layer_c.push(mc);
        layer_a.push(ma);
        layer_b.push(mb);
    }

    let lambda0 = s.largest();
    let sum_defect = (0..n)
        .map(|i| (c[i] + a[i] + b[i] - lambda0).abs())
        .fold(0.0, f64::max);

    IntersectionData {
        c,
        a,
        b,
        layer_c,
        layer_a,
        layer_b,
        spreads,
        sum_defect,
        lambda0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CombinatorialCheck {
    pub passed: bool,
    pub margin: Margin,
    pub spreads: Vec<LayerSpread>,
}

/// Passes iff every layer spread of `c`, `a`, `b` is at most
/// `tol_int · λ_0`.
pub fn check_combinatorial(id: &IntersectionData, tol_int: f64) -> CombinatorialCheck {
    let worst = id.spreads.iter().map(LayerSpread::max).fold(0.0, f64::max);
    let margin = Margin::new(worst, tol_int * id.lambda0);
    CombinatorialCheck {
        passed: margin.passes(),
        margin,
        spreads: id.spreads.clone(),
    }
}
