use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::analysis::quadrature::{compensated_sum, gauss_legendre, GaussRule};
use crate::error::{Error, Result};
use crate::exponents::ExtScalar;
use crate::norms::{weak_lq_1d, Sampled1};

const PANEL_NODES: usize = 16;
/// Gaussians are truncated to `|x| <= CUT s`.
const CUT: f64 = 6.0;
/// Frequency cells per unit of the transform's scale `min(1/s, 1)`.
const CELLS_PER_SCALE: f64 = 32.0;

/// Test functions of the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PittFamily {
    /// `e^{-(x/s)^2}`.
    Gaussian,
    /// `e^{-(x/s)^2} cos x`.
    Modulated,
}

impl PittFamily {
    pub fn name(self) -> &'static str {
        match self {
            PittFamily::Gaussian => "gaussian",
            PittFamily::Modulated => "modulated",
        }
    }

    fn eval(self, x: f64, s: f64) -> f64 {
        let g = (-(x / s).powi(2)).exp();
        match self {
            PittFamily::Gaussian => g,
            PittFamily::Modulated => g * x.cos(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PittSample {
    pub scale: f64,
    pub family: PittFamily,
    pub ratio: f64,
}

/// Ratios `||(1+|xi|)^-beta f^||_{L^{q,inf}} / ||f||_p` over both families.
#[derive(Clone, Debug, PartialEq)]
pub struct PittSweep {
    pub samples: Vec<PittSample>,
    pub max_ratio: f64,
    pub min_ratio: f64,
}

fn check(beta: &ExtScalar, p: &ExtScalar, q: &ExtScalar) -> Result<()> {
    let one = BigRational::one();
    let pv = p.as_finite().ok_or_else(|| Error::domain("need 1 <= p <= 2"))?;
    if *pv < one || *pv > BigRational::from_integer(2.into()) {
        return Err(Error::domain("need 1 <= p <= 2"));
    }
    let qv = q.as_finite().filter(|v| !v.is_zero()).ok_or_else(|| Error::domain("need 0 < q < inf"))?;
    let gap = qv.recip() - p.conjugate_recip()?;
    let b = beta.as_finite().ok_or_else(|| Error::domain("beta must be finite"))?;
    if gap < BigRational::zero() || gap > *b {
        return Err(Error::domain("need 0 <= 1/q - 1/p' <= beta"));
    }
    Ok(())
}

/// Composite rule on `[a, b]` with `panels` equal panels.
fn integrate(rule: &GaussRule, a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = (b - a) / panels as f64;
    compensated_sum((0..panels).map(|k| {
        let lo = a + h * k as f64;
        let hi = if k + 1 == panels { b } else { lo + h };
        rule.integrate(lo, hi, &f)
    }))
}

/// `||f||_p` with panels split at the zeros of `cos x`, where `|f|^p` has kinks.
fn lp_norm(family: PittFamily, s: f64, p: f64) -> f64 {
    let rule = gauss_legendre(PANEL_NODES);
    let top = CUT * s;
    let mut breaks = vec![0.0];
    if family == PittFamily::Modulated {
        let mut z = 0.5 * PI;
        while z < top {
            breaks.push(z);
            z += PI;
        }
    }
    breaks.push(top);
    let f = |x: f64| family.eval(x, s).abs().powf(p);
    let half = compensated_sum(breaks.windows(2).map(|w| integrate(&rule, w[0], w[1], 4, f)));
    (2.0 * half).powf(1.0 / p)
}

/// `f^(xi) = int f(x) e^{-i x xi} dx`; both families are even and real, so
/// this is `2 int_0^inf f(x) cos(x xi) dx`.
fn transform(family: PittFamily, s: f64, xi: f64) -> f64 {
    let rule = gauss_legendre(PANEL_NODES);
    let top = CUT * s;
    let waves = top * (xi.abs() + 1.0) / (2.0 * PI);
    let panels = (waves.ceil() as usize).max(1) + 4;
    2.0 * integrate(&rule, 0.0, top, panels, |x| family.eval(x, s) * (x * xi).cos())
}

fn ratio(family: PittFamily, s: f64, beta: f64, p: f64, q: f64) -> Result<f64> {
    let top = CUT * 2.0 / s + 2.0;
    let dxi = (1.0 / s).min(1.0) / CELLS_PER_SCALE;
    let cells = (2.0 * top / dxi).ceil() as usize;
    let dxi = 2.0 * top / cells as f64;
    let values: Vec<(f64, f64)> = (0..cells)
        .into_par_iter()
        .map(|i| {
            let xi = -top + (i as f64 + 0.5) * dxi;
            ((1.0 + xi.abs()).powf(-beta) * transform(family, s, xi).abs(), dxi)
        })
        .collect();
    let weak = weak_lq_1d(&Sampled1::new(values)?, q)?;
    Ok(weak / lp_norm(family, s, p))
}

/// Sweeps the dilation families over `scales`.
pub fn pitt_sweep(beta: &ExtScalar, p: &ExtScalar, q: &ExtScalar, scales: &[f64]) -> Result<PittSweep> {
    check(beta, p, q)?;
    if scales.is_empty() || scales.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
        return Err(Error::domain("scales must be positive and finite"));
    }
    let (b, pf, qf) = (beta.to_f64(), p.to_f64(), q.to_f64());
    let mut samples = Vec::with_capacity(2 * scales.len());
    for &s in scales {
        for family in [PittFamily::Gaussian, PittFamily::Modulated] {
            samples.push(PittSample { scale: s, family, ratio: ratio(family, s, b, pf, qf)? });
        }
    }
    let max_ratio = samples.iter().map(|s| s.ratio).fold(f64::NEG_INFINITY, f64::max);
    let min_ratio = samples.iter().map(|s| s.ratio).fold(f64::INFINITY, f64::min);
    if !(max_ratio.is_finite() && min_ratio > 0.0) {
        return Err(Error::numerical("pitt_sweep", "non-finite or vanishing ratio"));
    }
    Ok(PittSweep { samples, max_ratio, min_ratio })
}

impl PittSweep {
    /// The ratio of one family at one scale.
    pub fn ratio_at(&self, family: PittFamily, scale: f64) -> Option<f64> {
        self.samples
            .iter()
            .find(|s| s.family == family && s.scale == scale)
            .map(|s| s.ratio)
    }
}
