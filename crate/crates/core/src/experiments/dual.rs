use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::knapp::join;
use super::l2::KernelTable;
use super::predicted::{LogFlag, PredictedExponent};
use super::scan::{meta, ScanResult, ScanSample};
use super::WeightKind;
use crate::analysis::hankel_decay_transform;
use crate::analysis::quadrature::{compensated_sum, gauss_legendre};
use crate::error::{Error, Result};
use crate::exponents::rat;

const PANEL_NODES: usize = 16;
/// Log-scale depth of the `t` mesh below `pi` for the separable dual.
const SEPARABLE_SPAN: usize = 40;
/// The Hankel transform is only sampled down to `t ~ pi e^-20`.
const RADIAL_SPAN: usize = 20;

/// Quadrature description recorded in the metadata of dual scans.
pub const DUAL_QUAD_POLICY: &str = "t=pi*exp(-u),GL16 unit panels,power tail below mesh";

/// `int_0^pi g(t) dt` for `g ~ c t^{-1+eta}` at 0, via `t = pi e^-u` on
/// `span` unit panels plus the exact tail of the leading power.
fn log_mesh_integral(span: usize, eta: f64, g: impl Fn(f64) -> Result<f64> + Sync) -> Result<f64> {
    let rule = gauss_legendre(PANEL_NODES);
    let nodes: Vec<(f64, f64)> = (0..span)
        .flat_map(|k| {
            let lo = k as f64;
            rule.nodes
                .iter()
                .zip(&rule.weights)
                .map(move |(x, w)| (lo + 0.5 * (x + 1.0), 0.5 * w))
        })
        .collect();
    let values = nodes
        .par_iter()
        .map(|&(u, w)| {
            let t = PI * (-u).exp();
            g(t).map(|v| w * t * v)
        })
        .collect::<Result<Vec<f64>>>()?;
    let t_min = PI * (-(span as f64)).exp();
    let tail = g(t_min)? * t_min / eta;
    Ok(compensated_sum(values) + tail)
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Growth of `||R g_eps||_{L^r'}` against `eps^{-1/q'}` for the modulated
/// Schwartz functions behind the `q >= r` necessity, over `eps = 2^-k`.
///
/// The parameter of the returned samples is `1/eps`, so the fitted slope
/// is the growth exponent, predicted to be `1/r' - 1/q'`.
///
/// Separable: `g_eps = chi(x) u_eps(y) e^{iy}` with `chi = e^{-x^2}` and
/// `u_eps = (1+|y|)^{-(beta + (1+eps)/q')}`, whose transform on the circle is
/// `sqrt(pi) e^{-sin^2 t / 4} 2 K(kappa, 1 - cos t)`. Radial:
/// `g_eps = (1+|x|)^{-(gamma + 2/q' + eps)} e^{iy}`, whose transform is the
/// Hankel transform at `|xi - (0,1)| = 2 |sin(t/2)|`.
pub fn dual_scan(kind: &WeightKind, eps_exps: &[u32]) -> Result<ScanResult> {
    if eps_exps.len() < 3 || eps_exps.windows(2).any(|w| w[0] >= w[1]) || eps_exps[0] == 0 {
        return Err(Error::Config("need at least 3 strictly increasing positive eps exponents".into()));
    }
    let (r, q) = match kind {
        WeightKind::Separable(p) => (&p.r, &p.q),
        WeightKind::Radial(p) => (&p.r, &p.q),
    };
    let qv = q
        .as_finite()
        .filter(|v| **v >= BigRational::one())
        .ok_or_else(|| Error::domain("need 1 <= q < inf"))?;
    if r.as_finite().is_none_or(|v| *v <= BigRational::one()) {
        return Err(Error::domain("need 1 < r < inf"));
    }
    let inv_q = qv.recip();
    let inv_qc = BigRational::one() - &inv_q;
    let inv_rc = r.conjugate_recip()?;
    let rc = to_f64(&inv_rc).recip();
    let qc_inv = to_f64(&inv_qc);
    let mut metadata = kind.metadata();
    let mut samples = Vec::with_capacity(eps_exps.len());
    match kind {
        WeightKind::Separable(p) => {
            let alpha = p.alpha.as_finite().cloned().unwrap_or_default();
            let beta = p.beta.as_finite().cloned().unwrap_or_default();
            if alpha <= inv_q {
                return Err(Error::domain("need alpha > 1/q"));
            }
            if beta != &inv_q - &inv_rc * rat(1, 2) {
                return Err(Error::domain("need beta = 1/q - 1/(2 r')"));
            }
            if q == r {
                // Growth exponent zero; nothing degenerate, just recorded.
                metadata.insert("note".into(), "q=r".into());
            }
            if inv_qc.is_zero() {
                return Err(Error::domain("need q > 1 for the separable dual"));
            }
            let beta_f = to_f64(&beta);
            for &k in eps_exps {
                let eps = 0.5f64.powi(k as i32);
                let kappa = beta_f + (1.0 + eps) * qc_inv;
                if !(kappa > 0.0 && kappa < 1.0) {
                    return Err(Error::domain(format!("kernel exponent {kappa} outside (0, 1)")));
                }
                let table = KernelTable::new(kappa)?;
                let eta = 1.0 + 2.0 * (kappa - 1.0) * rc;
                if !(eta > 0.0) {
                    return Err(Error::domain("the dual function is not in L^r' of the circle"));
                }
                let g = |t: f64| {
                    let half = (0.5 * t).sin();
                    let chi = PI.sqrt() * (-0.25 * t.sin().powi(2)).exp();
                    Ok((chi * 2.0 * table.eval(2.0 * half * half)).powf(rc))
                };
                let lhs = (2.0 * log_mesh_integral(SEPARABLE_SPAN, eta, g)?).powf(1.0 / rc);
                samples.push(ScanSample::new(1.0 / eps, lhs, eps.powf(-qc_inv)));
            }
        }
        WeightKind::Radial(p) => {
            let gamma = p.gamma.as_finite().cloned().unwrap_or_default();
            if gamma != &inv_q * rat(2, 1) - &inv_rc {
                return Err(Error::domain("need gamma = 2/q - 1/r'"));
            }
            let hypothesis = gamma > &inv_q * rat(2, 1) - rat(1, 2);
            metadata.insert(
                "lemma_hypothesis".into(),
                if hypothesis { "satisfied" } else { "violated" }.into(),
            );
            let base = to_f64(&(&gamma + &inv_qc * rat(2, 1)));
            for &k in eps_exps {
                let eps = 0.5f64.powi(k as i32);
                let decay = base + eps;
                let eta = 1.0 + (decay - 2.0) * rc;
                if !(decay > 1.0 && decay < 2.0) || !(eta > 0.0) {
                    return Err(Error::domain(format!("decay exponent {decay} outside the admissible range")));
                }
                let g = |t: f64| Ok(hankel_decay_transform(decay, 2.0 * (0.5 * t).sin())?.abs().powf(rc));
                let lhs = (2.0 * log_mesh_integral(RADIAL_SPAN, eta, g)?).powf(1.0 / rc);
                samples.push(ScanSample::new(1.0 / eps, lhs, eps.powf(-qc_inv)));
            }
        }
    }
    metadata.extend(meta([
        ("experiment", "dual".into()),
        ("eps_exps", join(eps_exps)),
        ("param", "1/eps".into()),
        ("grid_policy", DUAL_QUAD_POLICY.into()),
    ]));
    let predicted = PredictedExponent { slope: inv_rc - inv_qc, log_flag: LogFlag::None };
    ScanResult::build(samples, Some(predicted), metadata)
}
