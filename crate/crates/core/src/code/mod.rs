//! Deciding whether a vertex set is a completely pseudo-regular code.
//!
//! The combinatorial test on the intersection functions is the reference; the
//! spectral tests (predistance polynomials on the subconstituents, projection
//! collinearity against the antipodal set, and the spectral excess bound) are
//! cross-checked against it by [`analyze`].

mod checks;
mod intersection;
mod report;

pub use checks::{
    check_collinearity, check_md_identities, check_multiplicity_products, check_predistance,
    check_spectral_excess, subconstituent_report, CollinearityCheck, ExcessCheck, LayerSpectrum,
    MdReport, MdRow, Mode, MultiplicityProductReport, MultiplicityProductRow, PredistanceCheck,
    SubconstituentReport,
};
pub use intersection::{
    check_combinatorial, intersection_functions, CombinatorialCheck, IntersectionData, LayerSpread,
};
pub use report::{analyze, Analysis, CodeReport, Overall, TestKind, TestVerdict};

/// A measured quantity and the threshold it is compared against. A check
/// passes when `value ≤ threshold`; the outcome is decisive when the value is
/// at least a factor 10 away from the threshold on either side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin {
    pub value: f64,
    pub threshold: f64,
}

impl Margin {
    pub fn new(value: f64, threshold: f64) -> Self {
        Margin { value, threshold }
    }

    pub fn passes(&self) -> bool {
        self.value <= self.threshold
    }

    pub fn is_decisive(&self) -> bool {
        self.value <= self.threshold / 10.0 || self.value >= self.threshold * 10.0
    }

    /// `value / threshold`; infinite for a zero threshold with positive value.
    pub fn ratio(&self) -> f64 {
        if self.threshold > 0.0 {
            self.value / self.threshold
        } else if self.value > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    }
}
