use std::fmt;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponents::{rat, ExtScalar};

/// Logarithmic correction attached to a predicted power law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LogFlag {
    None,
    Single,
    Double,
}

impl LogFlag {
    pub fn name(self) -> &'static str {
        match self {
            LogFlag::None => "none",
            LogFlag::Single => "single",
            LogFlag::Double => "double",
        }
    }

    fn from_count(n: usize) -> Self {
        match n {
            0 => LogFlag::None,
            1 => LogFlag::Single,
            _ => LogFlag::Double,
        }
    }
}

impl fmt::Display for LogFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent `s` of a predicted power law `delta^s` (or `j^s` for sums),
/// possibly times a power of `|log delta|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedExponent {
    pub slope: BigRational,
    pub log_flag: LogFlag,
}

impl PredictedExponent {
    /// True when the quantity blows up as the parameter tends to zero.
    pub fn predicts_blowup(&self) -> bool {
        self.slope < BigRational::zero() || (self.slope.is_zero() && self.log_flag != LogFlag::None)
    }

    pub fn slope_f64(&self) -> f64 {
        self.slope.to_f64().unwrap_or(f64::NAN)
    }
}

/// Which necessity computation the prediction refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredictKind {
    /// Knapp cap ratio for the separable weight.
    Separable { alpha: ExtScalar, beta: ExtScalar, q: ExtScalar, r: ExtScalar },
    /// Knapp cap ratio for the radial weight.
    Radial { gamma: ExtScalar, q: ExtScalar, r: ExtScalar },
    /// Summand exponent for the constant density; `weight_sum` is
    /// `alpha + beta` or `gamma`.
    Constant { weight_sum: ExtScalar, q: ExtScalar },
}

fn finite(x: &ExtScalar, what: &str) -> Result<BigRational> {
    x.as_finite()
        .cloned()
        .ok_or_else(|| Error::domain(format!("{what} must be finite")))
}

fn finite_q(q: &ExtScalar) -> Result<BigRational> {
    let q = finite(q, "q")?;
    if q.is_zero() {
        return Err(Error::domain("q must be positive"));
    }
    Ok(q)
}

/// Predicted exponents from the final case displays of the Knapp and
/// constant-density computations.
///
/// Separable (after ordering `alpha >= beta`): `1/r' + (a + b)/q` with
/// `a = 0 | LOG | -1 + alpha q` for `alpha >, =, < 1/q` and
/// `b = 0 | LOG | -2 + 2 beta q` likewise. Radial: `1/r' + E/q` with
/// `E = 0 | LOG | -2 + gamma q | -1 LOG | -3 + 2 gamma q` for
/// `gamma > 2/q`, `= 2/q`, `in (1/q, 2/q)`, `= 1/q`, `< 1/q`.
/// Constant: `1 - q (1/2 + weight_sum)`.
pub fn predicted_exponent(kind: &PredictKind) -> Result<PredictedExponent> {
    match kind {
        PredictKind::Separable { alpha, beta, q, r } => {
            let (a, b) = (finite(alpha, "alpha")?, finite(beta, "beta")?);
            let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
            let q = finite_q(q)?;
            let inv_q = q.recip();
            let inv_rc = r.conjugate_recip()?;
            let mut logs = 0;
            let mut part = |w: BigRational, below: BigRational| {
                if w > inv_q {
                    BigRational::zero()
                } else if w == inv_q {
                    logs += 1;
                    BigRational::zero()
                } else {
                    below
                }
            };
            let ea = part(hi.clone(), &hi * &q - BigRational::one());
            let eb = part(lo.clone(), &lo * &q * rat(2, 1) - rat(2, 1));
            Ok(PredictedExponent {
                slope: inv_rc + (ea + eb) / &q,
                log_flag: LogFlag::from_count(logs),
            })
        }
        PredictKind::Radial { gamma, q, r } => {
            let g = finite(gamma, "gamma")?;
            let q = finite_q(q)?;
            let inv_q = q.recip();
            let inv_rc = r.conjugate_recip()?;
            let two_q = &inv_q * rat(2, 1);
            let (e, logs) = if g > two_q {
                (BigRational::zero(), 0)
            } else if g == two_q {
                (BigRational::zero(), 1)
            } else if g > inv_q {
                (&g * &q - rat(2, 1), 0)
            } else if g == inv_q {
                (rat(-1, 1), 1)
            } else {
                (&g * &q * rat(2, 1) - rat(3, 1), 0)
            };
            Ok(PredictedExponent {
                slope: inv_rc + e / &q,
                log_flag: LogFlag::from_count(logs),
            })
        }
        PredictKind::Constant { weight_sum, q } => {
            let w = finite(weight_sum, "weight sum")?;
            let q = finite_q(q)?;
            Ok(PredictedExponent {
                slope: BigRational::one() - q * (rat(1, 2) + w),
                log_flag: LogFlag::None,
            })
        }
    }
}
