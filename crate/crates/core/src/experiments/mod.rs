//! Numerical reproductions of the necessity counterexamples: Knapp caps,
//! the constant density, the singular endpoint density, the modulated
//! Schwartz duals and the one-dimensional Pitt family.
//!
//! Every scan returns a [`ScanResult`] whose fitted log-log slope is
//! compared against the exact prediction. Parallel work is reduced in a
//! fixed order, so results are identical for every thread count.

mod constant;
mod dual;
mod fit;
mod knapp;
mod l2;
mod pitt;
mod predicted;
mod scan;

use std::collections::BTreeMap;

use crate::exponents::{RadialParams, SeparableParams};

pub use constant::{constant_density_sums, ConstantKind, ConstantSums, SeriesVerdict};
pub use dual::{dual_scan, DUAL_QUAD_POLICY};
pub use fit::{fit_loglog_slope, SlopeFit};
pub use knapp::{knapp_box, knapp_scan, KNAPP_CELL_BUDGET, KNAPP_STEP};
pub use l2::{l2_endpoint_scan, KernelTable};
pub use pitt::{pitt_sweep, PittFamily, PittSample, PittSweep};
pub use predicted::{predicted_exponent, LogFlag, PredictKind, PredictedExponent};
pub use scan::{ScanResult, ScanSample, GIT_DESCRIBE};

/// Weight family of a planar experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Separable(SeparableParams),
    Radial(RadialParams),
}

impl WeightKind {
    /// Parameter set in text form, for artifact metadata.
    pub fn metadata(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        match self {
            WeightKind::Separable(p) => {
                m.insert("kind".into(), "separable".into());
                m.insert("alpha".into(), p.alpha.to_string());
                m.insert("beta".into(), p.beta.to_string());
                m.insert("r".into(), p.r.to_string());
                m.insert("q".into(), p.q.to_string());
            }
            WeightKind::Radial(p) => {
                m.insert("kind".into(), "radial".into());
                m.insert("gamma".into(), p.gamma.to_string());
                m.insert("r".into(), p.r.to_string());
                m.insert("q".into(), p.q.to_string());
            }
        }
        m
    }
}
