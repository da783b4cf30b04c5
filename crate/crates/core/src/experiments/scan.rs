use std::collections::BTreeMap;

use super::fit::{fit_loglog_slope, SlopeFit};
use super::predicted::PredictedExponent;
use crate::error::Result;

/// Git description of the build, recorded in every scan's metadata.
pub const GIT_DESCRIBE: &str = env!("RESTRICTION_LAB_GIT_DESCRIBE");

/// One point of a scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanSample {
    pub param: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

impl ScanSample {
    pub fn new(param: f64, lhs: f64, rhs: f64) -> Self {
        ScanSample { param, lhs, rhs, ratio: lhs / rhs }
    }
}

/// Samples of an experiment with the fitted and predicted log-log slopes.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub samples: Vec<ScanSample>,
    /// Fit of `log2 ratio` against `log2 param`; absent below 3 samples.
    pub fitted: Option<SlopeFit>,
    pub predicted: Option<PredictedExponent>,
    pub metadata: BTreeMap<String, String>,
}

impl ScanResult {
    /// Fits the samples and fills in the shared metadata keys.
    pub fn build(
        samples: Vec<ScanSample>,
        predicted: Option<PredictedExponent>,
        mut metadata: BTreeMap<String, String>,
    ) -> Result<Self> {
        let fitted = if samples.len() >= 3 {
            let points: Vec<(f64, f64)> = samples.iter().map(|s| (s.param, s.ratio)).collect();
            Some(fit_loglog_slope(&points)?)
        } else {
            None
        };
        metadata.insert("git_describe".into(), GIT_DESCRIBE.into());
        if let Some(p) = &predicted {
            metadata.insert("predicted_slope".into(), p.slope.to_string());
            metadata.insert("log_flag".into(), p.log_flag.name().into());
        }
        if let Some(f) = &fitted {
            metadata.insert("fitted_slope".into(), format!("{:.16e}", f.slope));
            metadata.insert("fitted_stderr".into(), format!("{:.16e}", f.stderr));
            metadata.insert("fitted_r_squared".into(), format!("{:.16e}", f.r_squared));
        }
        Ok(ScanResult { samples, fitted, predicted, metadata })
    }

    pub fn fitted_slope(&self) -> Option<f64> {
        self.fitted.map(|f| f.slope)
    }
}

/// Shorthand for building metadata maps.
pub(crate) fn meta<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}
