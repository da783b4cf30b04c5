//! Interpolation-exponent certificates.
//!
//! A certificate is an explicit tuple `(theta, q0, q1, r0, r1 [, gamma1])`
//! showing that a target estimate `L^r -> L^q` is obtained by complex
//! interpolation between the unweighted endpoint and a weak-type weighted
//! endpoint. The solvers build one by exact back-substitution; the
//! verifiers re-check every constraint from scratch in rational arithmetic.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{rat, rmax, rmin, ExtScalar};

/// Witness for the separable-weight interpolation step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateOne {
    pub theta: ExtScalar,
    pub q0: ExtScalar,
    pub q1: ExtScalar,
    pub r0: ExtScalar,
    pub r1: ExtScalar,
}

/// Witness for the radial-weight interpolation step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTwo {
    pub theta: ExtScalar,
    pub q0: ExtScalar,
    pub q1: ExtScalar,
    pub r0: ExtScalar,
    pub r1: ExtScalar,
    pub gamma1: ExtScalar,
}

impl fmt::Display for CertificateOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theta={} q0={} q1={} r0={} r1={}",
            self.theta, self.q0, self.q1, self.r0, self.r1
        )
    }
}

impl fmt::Display for CertificateTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "theta={} q0={} q1={} r0={} r1={} gamma1={}",
            self.theta, self.q0, self.q1, self.r0, self.r1, self.gamma1
        )
    }
}

/// Result of an exact certificate check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub failed: Vec<&'static str>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }

    fn check(&mut self, name: &'static str, ok: bool) {
        if !ok {
            self.failed.push(name);
        }
    }
}

fn finite(x: &ExtScalar) -> Result<BigRational> {
    x.as_finite()
        .cloned()
        .ok_or_else(|| Error::domain("expected a finite exponent"))
}

/// `1/x` for `x > 0`; `1/inf = 0`.
fn inv(x: &ExtScalar) -> Option<BigRational> {
    x.recip_rational()
}

/// `1/x'` when `x >= 1`.
fn inv_conj(x: &ExtScalar) -> Option<BigRational> {
    x.conjugate_recip().ok()
}

/// Exponent with reciprocal `v`, for `v >= 0`.
fn from_recip(v: BigRational) -> ExtScalar {
    ExtScalar::Finite(v).recip()
}

/// Exponent whose conjugate has reciprocal `v` (`1/x = 1 - v`), for `v <= 1`.
fn from_conj_recip(v: &BigRational) -> ExtScalar {
    from_recip(BigRational::one() - v)
}

/// `alpha + beta > 2/q - 1/2` and `alpha + 2 beta >= 3/q - 1/r'`.
pub fn condition_one(alpha: &ExtScalar, beta: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> Result<bool> {
    let (a, b) = (finite(alpha)?, finite(beta)?);
    let iq = inv(q).ok_or_else(|| Error::domain("q must be positive"))?;
    let irc = r.conjugate_recip()?;
    Ok(&a + &b > &iq * rat(2, 1) - rat(1, 2) && &a + &b * rat(2, 1) >= &iq * rat(3, 1) - irc)
}

/// `gamma >= max(3/(2q) - 1/(2r'), 2/q - 1/r')` and `gamma > 2/q - 1/2`.
pub fn condition_two(gamma: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> Result<bool> {
    let g = finite(gamma)?;
    let iq = inv(q).ok_or_else(|| Error::domain("q must be positive"))?;
    let irc = r.conjugate_recip()?;
    let threshold = rmax(&iq * rat(3, 2) - &irc * rat(1, 2), &iq * rat(2, 1) - &irc);
    Ok(g >= threshold && g > iq * rat(2, 1) - rat(1, 2))
}

fn check_preconditions_one(alpha: &BigRational, beta: &BigRational, r: &ExtScalar, q: &ExtScalar) -> Result<()> {
    if q.is_infinite() || q.is_zero() {
        return Err(Error::domain("q must lie in (0, inf)"));
    }
    if r.is_infinite() || *r < ExtScalar::one() {
        return Err(Error::domain("r must lie in [1, inf)"));
    }
    if alpha.is_zero() {
        return Err(Error::domain(
            "alpha = 0 has no weighted endpoint; use the unweighted classifier",
        ));
    }
    if beta > alpha || beta < &BigRational::zero() {
        return Err(Error::domain("need 0 <= beta <= alpha"));
    }
    let iq = inv(q).expect("q finite and positive");
    if *alpha > iq {
        return Err(Error::domain("need alpha <= 1/q"));
    }
    Ok(())
}

/// Builds the certificate for the given `theta` by back-substitution:
/// `q1 = theta/alpha`, `theta/r1' = max(2 alpha - 2 beta, theta - 1/r, 0)`,
/// `(1-theta)/q0 = 1/q - alpha`, `(1-theta)/r0' = 1/r' - theta/r1'`.
///
/// Requires `0 < theta < 1`, `alpha > 0`, `alpha <= 1/q`, `r >= 1`.
pub fn back_substitute_one(
    theta: &BigRational,
    alpha: &BigRational,
    beta: &BigRational,
    r: &ExtScalar,
    q: &ExtScalar,
) -> Result<CertificateOne> {
    if *theta <= BigRational::zero() || *theta >= BigRational::one() || alpha.is_zero() {
        return Err(Error::domain("back-substitution needs 0 < theta < 1 and alpha > 0"));
    }
    let iq = inv(q).ok_or_else(|| Error::domain("q must be positive"))?;
    let ir = inv(r).ok_or_else(|| Error::domain("r must be positive"))?;
    let irc = r.conjugate_recip()?;
    let one_minus = BigRational::one() - theta;
    let s1 = rmax(
        rmax((alpha - beta) * rat(2, 1), theta - &ir),
        BigRational::zero(),
    );
    let inv_q0 = (&iq - alpha) / &one_minus;
    let inv_r0c = (&irc - &s1) / &one_minus;
    let inv_r1c = &s1 / theta;
    if inv_q0 < BigRational::zero() || inv_r0c > BigRational::one() || inv_r0c < BigRational::zero() {
        return Err(Error::domain("theta admits no exponents q0, r0"));
    }
    Ok(CertificateOne {
        theta: ExtScalar::Finite(theta.clone()),
        q0: from_recip(inv_q0),
        q1: ExtScalar::Finite(theta / alpha),
        r0: from_conj_recip(&inv_r0c),
        r1: from_conj_recip(&inv_r1c),
    })
}

/// Constructs an interpolation certificate for `R*_{alpha,beta}: L^r -> L^q`
/// in the regime `0 < alpha <= 1/q`, `0 <= beta <= alpha`, `r < inf`.
/// At `alpha = 1/q` the unweighted endpoint is `q0 = inf`.
///
/// Returns `Ok(None)` when no certificate exists. Any certificate returned
/// has passed [`verify_one`].
pub fn solve_one(
    alpha: &ExtScalar,
    beta: &ExtScalar,
    r: &ExtScalar,
    q: &ExtScalar,
) -> Result<Option<CertificateOne>> {
    let (a, b) = (finite(alpha)?, finite(beta)?);
    check_preconditions_one(&a, &b, r, q)?;
    let iq = inv(q).expect("checked");
    let ir = inv(r).expect("checked");
    let irc = r.conjugate_recip()?;

    // Open interval for theta.
    let lo = rmax((&a - &b) * rat(2, 1), BigRational::zero());
    let hi = rmin(BigRational::one() - &iq * rat(4, 1) + &a * rat(4, 1), BigRational::one());
    if lo >= hi {
        return Ok(None);
    }
    let closed_hi = BigRational::one() - &iq * rat(3, 1) + &a * rat(3, 1);
    let excluded = &a / &iq;
    let mut theta = (&lo + &hi) / rat(2, 1);
    if theta == excluded {
        theta = &lo + (&hi - &lo) / rat(4, 1);
    }
    if theta > closed_hi {
        return Ok(None);
    }

    // theta/r1' must fit below 1/r' - 3/q + 3 alpha so that r0 exists.
    let s1 = rmax(rmax((&a - &b) * rat(2, 1), &theta - &ir), BigRational::zero());
    if s1 > &irc - &iq * rat(3, 1) + &a * rat(3, 1) {
        return Ok(None);
    }

    let cert = back_substitute_one(&theta, &a, &b, r, q)?;
    let report = verify_one(&cert, alpha, beta, r, q);
    if !report.passed() {
        return Err(Error::Internal(format!(
            "constructed certificate {cert} fails {:?}",
            report.failed
        )));
    }
    Ok(Some(cert))
}

/// Checks every constraint of the separable interpolation step exactly.
///
/// Constraint names: `theta-range`, `q0-range`, `q1-range`, `r0-range`,
/// `r1-range`, `convexity-q`, `convexity-r`, `q0-le-3r0-conjugate`,
/// `q0-gt-4`, `alpha-split`, `beta-bound`, `q0-ne-q1`.
pub fn verify_one(
    cert: &CertificateOne,
    alpha: &ExtScalar,
    beta: &ExtScalar,
    r: &ExtScalar,
    q: &ExtScalar,
) -> VerifyReport {
    let mut report = VerifyReport::default();
    let theta = cert.theta.as_finite().cloned();
    report.check(
        "theta-range",
        theta
            .as_ref()
            .is_some_and(|t| *t > BigRational::zero() && *t < BigRational::one()),
    );
    report.check("q0-range", cert.q0 >= ExtScalar::one());
    report.check("q1-range", !cert.q1.is_infinite() && !cert.q1.is_zero());
    report.check("r0-range", cert.r0 >= ExtScalar::one());
    report.check("r1-range", cert.r1 >= ExtScalar::one() && !cert.r1.is_infinite());

    let theta = theta.unwrap_or_else(BigRational::zero);
    let one_minus = BigRational::one() - &theta;
    let (Some(iq0), Some(iq1), Some(iq), Some(ir0), Some(ir1), Some(ir)) = (
        inv(&cert.q0),
        inv(&cert.q1),
        inv(q),
        inv(&cert.r0),
        inv(&cert.r1),
        inv(r),
    ) else {
        report.failed.extend([
            "convexity-q",
            "convexity-r",
            "q0-le-3r0-conjugate",
            "q0-gt-4",
            "alpha-split",
            "beta-bound",
        ]);
        if cert.q0 == cert.q1 {
            report.failed.push("q0-ne-q1");
        }
        return report;
    };
    report.check("convexity-q", iq == &one_minus * &iq0 + &theta * &iq1);
    report.check("convexity-r", ir == &one_minus * &ir0 + &theta * &ir1);
    report.check(
        "q0-le-3r0-conjugate",
        inv_conj(&cert.r0).is_some_and(|c| &iq0 * rat(3, 1) <= c),
    );
    report.check("q0-gt-4", iq0 < rat(1, 4));
    let (a, b) = (alpha.as_finite(), beta.as_finite());
    report.check("alpha-split", a.is_some_and(|a| *a == &theta * &iq1));
    report.check(
        "beta-bound",
        b.zip(inv_conj(&cert.r1))
            .is_some_and(|(b, c1)| *b >= &theta * (&iq1 - c1 * rat(1, 2))),
    );
    report.check("q0-ne-q1", cert.q0 != cert.q1);
    report
}

/// Constructs an interpolation certificate for the radial weight with
/// exponent `gamma > 0`. Returns `Ok(None)` when none exists.
pub fn solve_two(gamma: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> Result<Option<CertificateTwo>> {
    let g = finite(gamma)?;
    if g <= BigRational::zero() {
        return Err(Error::domain("need gamma > 0"));
    }
    if q.is_infinite() || q.is_zero() {
        return Err(Error::domain("q must lie in (0, inf)"));
    }
    let iq = inv(q).expect("checked");
    let irc = r.conjugate_recip()?;

    if g <= &iq * rat(2, 1) - rat(1, 2) {
        return Ok(None);
    }
    // theta in [max(a, b), hi) intersected with (0, 1).
    let a = &iq * rat(4, 1) - &g * rat(2, 1) - &irc * rat(4, 3);
    let b = &iq * rat(12, 1) - &g * rat(6, 1) - &irc * rat(4, 1);
    let lo = rmax(rmax(a, b), BigRational::zero());
    let hi = rmin(BigRational::one() - &iq * rat(4, 1) + &g * rat(4, 1), BigRational::one());
    if lo >= hi {
        return Ok(None);
    }
    let thetas = [
        (&lo + &hi) / rat(2, 1),
        &lo + (&hi - &lo) / rat(4, 1),
        &lo + (&hi - &lo) * rat(3, 4),
    ];
    for theta in &thetas {
        if let Some(cert) = try_theta_two(theta, &g, &iq, &irc) {
            let report = verify_two(&cert, gamma, r, q);
            if !report.passed() {
                return Err(Error::Internal(format!(
                    "constructed certificate {cert} fails {:?}",
                    report.failed
                )));
            }
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Picks `X = (1-theta)/q0` in its window and recovers the remaining
/// exponents, choosing `r0` as small as the constraints allow.
fn try_theta_two(
    theta: &BigRational,
    gamma: &BigRational,
    iq: &BigRational,
    irc: &BigRational,
) -> Option<CertificateTwo> {
    let one_minus = BigRational::one() - theta;
    let lower = rmax(
        rmax(iq - gamma, iq - gamma / rat(2, 1) - theta / rat(4, 1)),
        BigRational::zero(),
    );
    let upper = rmin(rmin(iq.clone(), irc / rat(3, 1)), gamma - iq * rat(2, 1) + irc);
    // Strict bounds: 1/q0 < 1/4 and q1 finite.
    let strict = rmin(&one_minus / rat(4, 1), iq.clone());
    if lower > upper || lower >= strict {
        return None;
    }
    let top = rmin(upper.clone(), strict.clone());
    let clash = &one_minus * iq;
    let candidates = [
        lower.clone(),
        (&lower + &top) / rat(2, 1),
        &lower + (&top - &lower) / rat(4, 1),
    ];
    let x = candidates
        .into_iter()
        .find(|x| *x >= lower && *x <= upper && *x < strict && *x != clash)?;

    let r0_part = rmax(&x * rat(3, 1), irc - theta);
    let inv_q0 = &x / &one_minus;
    let inv_q1 = (iq - &x) / theta;
    let inv_r0c = &r0_part / &one_minus;
    let inv_r1c = (irc - &r0_part) / theta;
    Some(CertificateTwo {
        theta: ExtScalar::Finite(theta.clone()),
        q0: from_recip(inv_q0),
        q1: from_recip(inv_q1),
        r0: from_conj_recip(&inv_r0c),
        r1: from_conj_recip(&inv_r1c),
        gamma1: ExtScalar::Finite(gamma / theta),
    })
}

/// Checks every constraint of the radial interpolation step exactly.
///
/// Constraint names: `theta-range`, `q0-range`, `q1-range`, `r0-range`,
/// `r1-range`, `convexity-q`, `convexity-r`, `three-over-q0-le-r0-conjugate`,
/// `q0-gt-4`, `q0-ne-q1`, `gamma-split`, `gamma1-bound`.
pub fn verify_two(cert: &CertificateTwo, gamma: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> VerifyReport {
    let mut report = VerifyReport::default();
    let theta = cert.theta.as_finite().cloned();
    report.check(
        "theta-range",
        theta
            .as_ref()
            .is_some_and(|t| *t > BigRational::zero() && *t < BigRational::one()),
    );
    report.check("q0-range", cert.q0 >= ExtScalar::one());
    report.check("q1-range", !cert.q1.is_infinite() && !cert.q1.is_zero());
    report.check("r0-range", cert.r0 >= ExtScalar::one());
    report.check("r1-range", cert.r1 >= ExtScalar::one());

    let theta = theta.unwrap_or_else(BigRational::zero);
    let one_minus = BigRational::one() - &theta;
    let (Some(iq0), Some(iq1), Some(iq), Some(ir0), Some(ir1), Some(ir)) = (
        inv(&cert.q0),
        inv(&cert.q1),
        inv(q),
        inv(&cert.r0),
        inv(&cert.r1),
        inv(r),
    ) else {
        report.failed.extend([
            "convexity-q",
            "convexity-r",
            "three-over-q0-le-r0-conjugate",
            "q0-gt-4",
            "gamma-split",
            "gamma1-bound",
        ]);
        if cert.q0 == cert.q1 {
            report.failed.push("q0-ne-q1");
        }
        return report;
    };
    report.check("convexity-q", iq == &one_minus * &iq0 + &theta * &iq1);
    report.check("convexity-r", ir == &one_minus * &ir0 + &theta * &ir1);
    report.check(
        "three-over-q0-le-r0-conjugate",
        inv_conj(&cert.r0).is_some_and(|c| &iq0 * rat(3, 1) <= c),
    );
    report.check("q0-gt-4", iq0 < rat(1, 4));
    report.check("q0-ne-q1", cert.q0 != cert.q1);
    let (g, g1) = (gamma.as_finite(), cert.gamma1.as_finite());
    report.check(
        "gamma-split",
        g.zip(g1).is_some_and(|(g, g1)| *g == &theta * g1),
    );
    report.check(
        "gamma1-bound",
        g1.zip(inv_conj(&cert.r1)).is_some_and(|(g1, c1)| {
            let need = rmax(
                rmax(iq1.clone(), &iq1 * rat(2, 1) - c1),
                &iq1 * rat(2, 1) - rat(1, 2),
            );
            *g1 >= need
        }),
    );
    report
}
