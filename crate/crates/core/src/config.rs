use crate::error::{Error, Result};

/// Numerical tolerances. Each value is a dimensionless factor; the effective
/// threshold is the factor times the scale named on the field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Eigenvalue clustering gap, times `max(1, ‖A‖_F)`.
    pub tol_eig: f64,
    /// Projector identities, times `n`.
    pub tol_proj: f64,
    /// Absolute threshold below which a local multiplicity counts as zero.
    pub tol_m: f64,
    /// Polynomial identities, times `max(1, p_k(μ_0))`.
    pub tol_poly: f64,
    /// Leading-coefficient floor for degree checks (absolute).
    pub tol_coef: f64,
    /// Vector residuals, times the norm of the target vector.
    pub tol_vec: f64,
    /// Intersection-function spreads, times `λ_0`.
    pub tol_int: f64,
    /// Spectral-excess and multiplicity-product gaps, times the bound.
    pub tol_ex: f64,
    /// Seed for randomized corpora.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tol_eig: 1e-8,
            tol_proj: 1e-9,
            tol_m: 1e-10,
            tol_poly: 1e-8,
            tol_coef: 1e-10,
            tol_vec: 1e-8,
            tol_int: 1e-9,
            tol_ex: 1e-8,
            seed: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        let named = [
            ("tol-eig", self.tol_eig),
            ("tol-proj", self.tol_proj),
            ("tol-m", self.tol_m),
            ("tol-poly", self.tol_poly),
            ("tol-coef", self.tol_coef),
            ("tol-vec", self.tol_vec),
            ("tol-int", self.tol_int),
            ("tol-ex", self.tol_ex),
        ];
        for (name, value) in named {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Config(format!(
                    "{name} must be a positive finite number, got {value}"
                )));
            }
        }
        Ok(())
    }
}
