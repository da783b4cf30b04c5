use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::knapp::join;
use super::predicted::{LogFlag, PredictedExponent};
use super::scan::{meta, ScanResult, ScanSample};
use crate::analysis::quadrature::{compensated_sum, gauss_legendre};
use crate::analysis::{cosine_weight_kernel, fresnel_constant};
use crate::error::{Error, Result};
use crate::exponents::{rat, ExtScalar};
use crate::operator::{circle_norm, Density};

/// Table nodes per decade of `lambda`.
const PER_DECADE: usize = 64;
const TABLE_MIN: f64 = 1e-12;
const TABLE_MAX: f64 = 2.0;
/// The outer variable runs down to `delta e^-OUTER_SPAN`.
const OUTER_SPAN: f64 = 36.0;
const OUTER_NODES: usize = 16;
const INNER_NODES: usize = 24;
const INNER_PANELS: usize = 3;

/// `K(kappa, lambda)` on a logarithmic grid, interpolated in `ln lambda`.
///
/// The tabulated quantity is `lambda^{1-kappa} K`, which tends to `C(kappa)`
/// as `lambda -> 0` and is smooth in `ln lambda`. Below the table the
/// two-term expansion `C lambda^{kappa-1} - 1/(1-kappa)` is used.
#[derive(Clone, Debug)]
pub struct KernelTable {
    kappa: f64,
    fresnel: f64,
    ln_min: f64,
    step: f64,
    scaled: Vec<f64>,
}

impl KernelTable {
    pub fn new(kappa: f64) -> Result<Self> {
        let fresnel = fresnel_constant(kappa)?;
        let ln_min = TABLE_MIN.ln();
        let step = std::f64::consts::LN_10 / PER_DECADE as f64;
        let n = ((TABLE_MAX.ln() - ln_min) / step).ceil() as usize + 4;
        let scaled = (0..n)
            .into_par_iter()
            .map(|i| {
                let lambda = (ln_min + step * (i as f64 - 1.0)).exp();
                cosine_weight_kernel(kappa, lambda).map(|k| lambda.powf(1.0 - kappa) * k)
            })
            .collect::<Result<Vec<f64>>>()?;
        Ok(KernelTable { kappa, fresnel, ln_min, step, scaled })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        let k = self.kappa;
        if lambda < TABLE_MIN {
            return self.fresnel * lambda.powf(k - 1.0) - 1.0 / (1.0 - k);
        }
        // Node i sits at ln_min + step (i - 1); cubic through i-1..i+2.
        let u = (lambda.ln() - self.ln_min) / self.step + 1.0;
        let i = (u.floor() as usize).clamp(1, self.scaled.len() - 3);
        let t = u - i as f64;
        let y = &self.scaled[i - 1..i + 3];
        let value = -t * (t - 1.0) * (t - 2.0) / 6.0 * y[0]
            + (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0 * y[1]
            - (t + 1.0) * t * (t - 2.0) / 2.0 * y[2]
            + (t + 1.0) * t * (t - 1.0) / 6.0 * y[3];
        value * lambda.powf(k - 1.0)
    }
}

struct Setup {
    alpha_table: KernelTable,
    beta_table: KernelTable,
    delta: f64,
    /// Grading exponent at the diagonal.
    diag_power: f64,
}

impl Setup {
    /// `K(2 alpha, sin phi - sin vphi) K(2 beta, cos vphi - cos phi)` at
    /// `vphi = s phi`, with the differences formed without cancellation.
    fn kernels(&self, phi: f64, one_minus_s: f64) -> f64 {
        let half_diff = 0.5 * phi * one_minus_s;
        let half_sum = phi - half_diff;
        let sd = half_diff.sin();
        let l1 = 2.0 * half_sum.cos() * sd;
        let l2 = 2.0 * half_sum.sin() * sd;
        self.alpha_table.eval(l1) * self.beta_table.eval(l2)
    }

    /// `int_0^phi vphi^{-mu} K K d vphi`.
    fn inner(&self, phi: f64, mu: f64) -> f64 {
        let rule = gauss_legendre(INNER_NODES);
        // s in [0, 1/2]: s = v^{1/(1-mu)} / 2 absorbs s^{-mu}.
        let pe = 1.0 / (1.0 - mu);
        let near_zero = rule.composite(0.0, 1.0, INNER_PANELS, |v| {
            let s = 0.5 * v.powf(pe);
            self.kernels(phi, 1.0 - s)
        }) * 0.5f64.powf(1.0 - mu)
            * pe;
        // s in [1/2, 1]: 1 - s = w^p / 2 grades toward the diagonal.
        let p = self.diag_power;
        let near_diag = rule.composite(0.0, 1.0, INNER_PANELS, |w| {
            if w == 0.0 {
                return 0.0;
            }
            let oms = 0.5 * w.powf(p);
            (1.0 - oms).powf(-mu) * self.kernels(phi, oms) * 0.5 * p * w.powf(p - 1.0)
        });
        phi.powf(1.0 - mu) * (near_zero + near_diag)
    }

    /// `8 int_0^delta phi^{-mu} inner(phi) d phi`, with the analytic tail
    /// below `delta e^-OUTER_SPAN` where the integrand is `c phi^{-1+2 eps}`.
    fn double_integral(&self, mu: f64, eps: f64) -> f64 {
        let rule = gauss_legendre(OUTER_NODES);
        let panels = OUTER_SPAN as usize;
        let nodes: Vec<(f64, f64)> = (0..panels)
            .flat_map(|k| {
                let lo = k as f64;
                rule.nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(move |(x, w)| (lo + 0.5 * (x + 1.0), 0.5 * w))
            })
            .collect();
        let values: Vec<f64> = nodes
            .par_iter()
            .map(|&(t, w)| {
                let phi = self.delta * (-t).exp();
                w * phi * phi.powf(-mu) * self.inner(phi, mu)
            })
            .collect();
        let phi_min = self.delta * (-OUTER_SPAN).exp();
        let tail = phi_min * phi_min.powf(-mu) * self.inner(phi_min, mu) / (2.0 * eps);
        8.0 * (compensated_sum(values) + tail)
    }
}

/// Blow-up of the `L^2` norm of the extended singular density against its
/// `L^r` norm, as `mu = 1/r - eps` approaches `1/r`, for `eps = 2^-k`.
pub fn l2_endpoint_scan(
    alpha: &ExtScalar,
    beta: &ExtScalar,
    r: &ExtScalar,
    delta: f64,
    eps_exps: &[u32],
) -> Result<ScanResult> {
    let fin = |x: &ExtScalar, what: &str| {
        x.as_finite().cloned().ok_or_else(|| Error::domain(format!("{what} must be finite")))
    };
    let (a, b, rr) = (fin(alpha, "alpha")?, fin(beta, "beta")?, fin(r, "r")?);
    let half = rat(1, 2);
    if !(b > BigRational::zero() && b <= a && a < half) {
        return Err(Error::domain("need 0 < 2 beta <= 2 alpha < 1"));
    }
    if &a + &b <= half {
        return Err(Error::domain("need alpha + beta > 1/2"));
    }
    if rr <= BigRational::one() {
        return Err(Error::domain("need 1 < r < inf"));
    }
    let inv_rc = r.conjugate_recip()?;
    if &a + &b * rat(2, 1) != rat(3, 2) - &inv_rc {
        return Err(Error::domain("need alpha + 2 beta = 3/2 - 1/r'"));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::domain(format!("delta must lie in (0, 1], got {delta}")));
    }
    if eps_exps.len() < 3 || eps_exps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("need at least 3 strictly increasing eps exponents".into()));
    }
    let inv_r = rr.recip();
    let inv_r_f = inv_r.to_f64().unwrap_or(f64::NAN);
    if 0.5f64.powi(eps_exps[0] as i32) >= inv_r_f {
        return Err(Error::Config("eps must stay below 1/r".into()));
    }
    let (af, bf) = (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN));
    let diag = 2.0 - 2.0 * af - 2.0 * bf;
    let alpha_table = KernelTable::new(2.0 * af)?;
    let beta_table = if a == b { alpha_table.clone() } else { KernelTable::new(2.0 * bf)? };
    let setup = Setup { alpha_table, beta_table, delta, diag_power: (1.0 / (1.0 - diag)).max(3.0) };
    let mut samples = Vec::with_capacity(eps_exps.len());
    for &k in eps_exps {
        let eps = 0.5f64.powi(k as i32);
        let mu = inv_r_f - eps;
        let lhs = setup.double_integral(mu, eps);
        let norm = circle_norm(&Density::power_singular(delta, mu)?, r)?;
        if !(lhs > 0.0 && lhs.is_finite()) {
            return Err(Error::numerical("l2_endpoint_scan", format!("double integral {lhs:e} at eps=2^-{k}")));
        }
        samples.push(ScanSample::new(eps, lhs, norm * norm));
    }
    let predicted = PredictedExponent { slope: inv_r * rat(2, 1) - BigRational::one(), log_flag: LogFlag::None };
    let metadata = meta([
        ("experiment", "l2-endpoint".into()),
        ("alpha", alpha.to_string()),
        ("beta", beta.to_string()),
        ("r", r.to_string()),
        ("delta", format!("{delta:.16e}")),
        ("eps_exps", join(eps_exps)),
        ("param", "eps".into()),
        (
            "grid_policy",
            format!(
                "outer=GL{OUTER_NODES}x{}panels(log),inner=GL{INNER_NODES}x{INNER_PANELS}x2,diag_grading={},kernel_table={PER_DECADE}/decade",
                OUTER_SPAN as usize, setup.diag_power
            ),
        ),
    ]);
    ScanResult::build(samples, Some(predicted), metadata)
}
