//! Decaying-cosine integrals by half-period partition and Euler averaging.
//!
//! Each integral is split at the zeros of its oscillating factor. Past the
//! first piece the segment integrals alternate in sign with a smooth
//! envelope, so repeated averaging of the partial sums (the Euler
//! transform) converges geometrically.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::bessel::{bessel_j0, j0_zeros};
use super::quadrature::gauss_legendre;
use crate::error::{Error, Result};

/// Number of alternating segments summed before acceleration.
const SEGMENTS: usize = 64;
const SEGMENT_NODES: usize = 24;
/// Accepted relative size of the acceleration error estimate.
const ACCEL_TOL: f64 = 1e-10;

/// Euler-transformed sum of an alternating series given by its terms.
///
/// Returns the accelerated value and an error estimate (the change caused
/// by the last averaging level).
pub fn euler_sum(terms: &[f64]) -> (f64, f64) {
    let mut sums: Vec<f64> = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    match sums.len() {
        0 => return (0.0, 0.0),
        1 => return (sums[0], terms[0].abs()),
        _ => {}
    }
    let mut prev = sums[0];
    while sums.len() > 1 {
        prev = sums[0];
        sums = sums.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    (sums[0], (sums[0] - prev).abs())
}

fn accelerate(context: &str, head: f64, tail: &[f64]) -> Result<f64> {
    let (tail_sum, err) = euler_sum(tail);
    let value = head + tail_sum;
    if !value.is_finite() || err > ACCEL_TOL * value.abs().max(1e-300) {
        return Err(Error::numerical(
            context,
            format!("acceleration did not settle (value {value:e}, estimate {err:e})"),
        ));
    }
    Ok(value)
}

fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa > 0.0 && kappa < 1.0) {
        return Err(Error::domain(format!("kappa must lie in (0, 1), got {kappa}")));
    }
    Ok(())
}

/// `int_0^inf (1+r)^{-kappa} cos(lambda r) dr` for `0 < kappa < 1`, `lambda > 0`.
pub fn cosine_weight_kernel(kappa: f64, lambda: f64) -> Result<f64> {
    check_kappa(kappa)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain(format!("lambda must be positive, got {lambda}")));
    }
    let rule = gauss_legendre(SEGMENT_NODES);

    // First quarter period [0, pi/(2 lambda)] in the variable v = ln(1+r),
    // which resolves the unit-scale decay near r = 0 on a long interval.
    let top = (PI / (2.0 * lambda)).ln_1p();
    let panels = (top / 0.25).ceil().max(1.0) as usize;
    let head = rule.composite(0.0, top, panels, |v| {
        ((1.0 - kappa) * v).exp() * (lambda * v.exp_m1()).cos()
    });

    // Segment k covers ((k - 1/2) pi, (k + 1/2) pi) / lambda, where
    // cos(lambda r) = (-1)^k sin(u) with u = lambda r - (k - 1/2) pi.
    let tail: Vec<f64> = (1..=SEGMENTS)
        .map(|k| {
            let start = (k as f64 - 0.5) * PI / lambda;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let seg = rule.integrate(0.0, PI, |u| {
                (1.0 + start + u / lambda).powf(-kappa) * u.sin()
            });
            sign * seg / lambda
        })
        .collect();
    accelerate("cosine_weight_kernel", head, &tail)
}

/// `C(kappa) = int_0^inf rho^{-kappa} cos(rho) d rho`, positive for `0 < kappa < 1`.
pub fn fresnel_constant(kappa: f64) -> Result<f64> {
    check_kappa(kappa)?;
    let rule = gauss_legendre(SEGMENT_NODES);
    // rho = u^{1/(1-kappa)} removes the integrable singularity at 0.
    let p = 1.0 / (1.0 - kappa);
    let top = (PI / 2.0).powf(1.0 - kappa);
    let head = p * rule.composite(0.0, top, 4, |u| u.powf(p).cos());
    let tail: Vec<f64> = (1..=SEGMENTS)
        .map(|k| {
            let start = (k as f64 - 0.5) * PI;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * rule.integrate(0.0, PI, |u| (start + u).powf(-kappa) * u.sin())
        })
        .collect();
    accelerate("fresnel_constant", head, &tail)
}

fn bessel_zeros() -> Result<&'static [f64]> {
    static ZEROS: OnceLock<Vec<f64>> = OnceLock::new();
    if let Some(z) = ZEROS.get() {
        return Ok(z);
    }
    let zeros = j0_zeros(SEGMENTS + 1)?;
    Ok(ZEROS.get_or_init(|| zeros))
}

/// `2 pi int_0^inf r (1+r^2)^{-delta/2} J0(r s) dr` for `1 < delta < 2`, `s > 0`.
///
/// This is the Fourier transform of `(1+|x|^2)^{-delta/2}` on the plane at
/// frequency modulus `s`; it grows like `s^{delta-2}` as `s -> 0`.
pub fn hankel_decay_transform(delta: f64, s: f64) -> Result<f64> {
    if !(delta > 1.0 && delta < 2.0) {
        return Err(Error::domain(format!("delta must lie in (1, 2), got {delta}")));
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("s must be positive, got {s}")));
    }
    let zeros = bessel_zeros()?;
    let rule = gauss_legendre(SEGMENT_NODES);
    // After t = r s the integrand is t (1 + t^2/s^2)^{-delta/2} J0(t) / s^2.
    let h = |t: f64| t * (1.0 + (t / s).powi(2)).powf(-0.5 * delta) * bessel_j0(t);

    // The first segment [0, j_1] holds the transition at t ~ s; resolve it
    // with panels that double in width.
    let mut breaks = vec![0.0];
    let mut edge = s / 64.0;
    while edge < zeros[0] {
        breaks.push(edge);
        edge *= 2.0;
    }
    breaks.push(zeros[0]);
    let head: f64 = breaks
        .windows(2)
        .map(|w| rule.integrate(w[0], w[1], h))
        .sum();
    let tail: Vec<f64> = zeros
        .windows(2)
        .map(|w| rule.integrate(w[0], w[1], h))
        .collect();
    let value = accelerate("hankel_decay_transform", head, &tail)?;
    Ok(2.0 * PI * value / (s * s))
}

/// Shape of the amplitude `chi` in `int_0^inf chi(r) r^{-kappa} cos(lambda r) dr`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChiForm {
    /// `chi` constant equal to `chi_inf`.
    Constant,
    /// `chi(r) = chi_inf (r/(1+r))^kappa`, which turns the integral into
    /// `chi_inf int (1+r)^{-kappa} cos(lambda r) dr`; decays with `sigma = 1`.
    ShiftedPower,
}

/// Parameters of a small-frequency oscillatory integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscIntSpec {
    pub kappa: f64,
    pub lambda: f64,
    pub decay_sigma: f64,
    pub chi: ChiForm,
    pub chi_inf: f64,
}

impl OscIntSpec {
    pub fn new(kappa: f64, lambda: f64, chi: ChiForm, chi_inf: f64) -> Result<Self> {
        check_kappa(kappa)?;
        if !(lambda > 0.0) || !(chi_inf > 0.0) {
            return Err(Error::domain("need lambda > 0 and chi_inf > 0"));
        }
        let decay_sigma = 1.0;
        if kappa + decay_sigma <= 1.0 {
            return Err(Error::domain("need kappa + sigma > 1"));
        }
        Ok(OscIntSpec { kappa, lambda, decay_sigma, chi, chi_inf })
    }

    /// The integral itself.
    pub fn integral(&self) -> Result<f64> {
        match self.chi {
            ChiForm::Constant => {
                Ok(self.chi_inf * self.lambda.powf(self.kappa - 1.0) * fresnel_constant(self.kappa)?)
            }
            ChiForm::ShiftedPower => Ok(self.chi_inf * cosine_weight_kernel(self.kappa, self.lambda)?),
        }
    }

    /// `chi_inf C(kappa)`, the small-frequency limit of the scaled integral.
    pub fn limit(&self) -> Result<f64> {
        Ok(self.chi_inf * fresnel_constant(self.kappa)?)
    }

    /// `lambda^{1-kappa}` times the integral divided by the limit.
    pub fn limit_ratio(&self) -> Result<f64> {
        Ok(self.lambda.powf(1.0 - self.kappa) * self.integral()? / self.limit()?)
    }
}
