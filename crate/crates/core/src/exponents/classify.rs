//! Sharp boundedness regions of the weighted extension operators.
//!
//! Every comparison is carried out in exact rational arithmetic. The region
//! boundaries are where all the content sits (strict versus non-strict
//! inequalities), so no floating point is involved anywhere in this file.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::scalar::{rat, rmax, rmin, ExtScalar};
use crate::error::{Error, Result};

/// Weight `(1+|x|)^-alpha (1+|y|)^-beta` with data in `L^r`, target `L^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparableParams {
    pub alpha: ExtScalar,
    pub beta: ExtScalar,
    pub r: ExtScalar,
    pub q: ExtScalar,
}

impl SeparableParams {
    pub fn new(alpha: ExtScalar, beta: ExtScalar, r: ExtScalar, q: ExtScalar) -> Result<Self> {
        if alpha.is_infinite() || beta.is_infinite() {
            return Err(Error::domain("weight exponents must be finite"));
        }
        check_r(&r)?;
        check_q(&q)?;
        Ok(Self { alpha, beta, r, q })
    }

    /// Parses four exponents in text form (`p/q`, integers, `inf`).
    pub fn parse(alpha: &str, beta: &str, r: &str, q: &str) -> Result<Self> {
        Self::new(alpha.parse()?, beta.parse()?, r.parse()?, q.parse()?)
    }
}

/// Weight `(1+|x|+|y|)^-gamma` with data in `L^r`, target `L^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialParams {
    pub gamma: ExtScalar,
    pub r: ExtScalar,
    pub q: ExtScalar,
}

impl RadialParams {
    pub fn new(gamma: ExtScalar, r: ExtScalar, q: ExtScalar) -> Result<Self> {
        if gamma.is_infinite() {
            return Err(Error::domain("weight exponent must be finite"));
        }
        check_r(&r)?;
        check_q(&q)?;
        Ok(Self { gamma, r, q })
    }

    pub fn parse(gamma: &str, r: &str, q: &str) -> Result<Self> {
        Self::new(gamma.parse()?, r.parse()?, q.parse()?)
    }
}

fn check_r(r: &ExtScalar) -> Result<()> {
    if *r < ExtScalar::one() {
        return Err(Error::domain(format!("r must lie in [1, inf], got {r}")));
    }
    Ok(())
}

fn check_q(q: &ExtScalar) -> Result<()> {
    if q.is_zero() {
        return Err(Error::domain("q must lie in (0, inf]"));
    }
    Ok(())
}

/// Which sufficient condition established boundedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    QInfinite,
    I,
    Ii,
    Iii,
    Iv,
    FzInterior,
    FzEndpoint,
    RadialStrict,
    RadialEndpoint,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::QInfinite => "q-infinite",
            CaseTag::I => "i",
            CaseTag::Ii => "ii",
            CaseTag::Iii => "iii",
            CaseTag::Iv => "iv",
            CaseTag::FzInterior => "fz-interior",
            CaseTag::FzEndpoint => "fz-endpoint",
            CaseTag::RadialStrict => "radial-strict",
            CaseTag::RadialEndpoint => "radial-endpoint",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first necessary condition that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// `q > 4` (unweighted).
    QAtMostFour,
    /// `q >= 3r'` (unweighted).
    QBelowThreeRConjugate,
    /// `alpha + beta > 2/q - 1/2`.
    SeparableSum,
    /// `2 min >= 2/q - 1/r'` when `max >= 1/q`.
    TwoMin,
    /// `alpha + beta + min >= 3/q - 1/r'` when `max < 1/q`.
    SumPlusMin,
    /// Endpoint with `max = 1/q` exactly.
    EndpointMaxEqualsInvQ,
    /// `gamma > 2/q - 1/2`.
    RadialGamma,
    /// `gamma >= max(3/(2q) - 1/(2r'), 2/q - 1/r')`.
    RadialThreshold,
    /// Endpoint needs `r > 1`.
    EndpointRIsOne,
    /// Endpoint needs `r <= q`.
    EndpointRAboveQ,
    /// Radial endpoint needs `q != r'`.
    EndpointQEqualsRConjugate,
}

impl Violation {
    pub fn name(self) -> &'static str {
        match self {
            Violation::QAtMostFour => "q-gt-4",
            Violation::QBelowThreeRConjugate => "q-ge-3r-conjugate",
            Violation::SeparableSum => "alpha-plus-beta-gt-2/q-minus-1/2",
            Violation::TwoMin => "two-min-ge-2/q-minus-1/r-conjugate",
            Violation::SumPlusMin => "sum-plus-min-ge-3/q-minus-1/r-conjugate",
            Violation::EndpointMaxEqualsInvQ => "endpoint-max-equals-1/q",
            Violation::RadialGamma => "gamma-gt-2/q-minus-1/2",
            Violation::RadialThreshold => "gamma-ge-radial-threshold",
            Violation::EndpointRIsOne => "endpoint-requires-r-gt-1",
            Violation::EndpointRAboveQ => "endpoint-requires-r-le-q",
            Violation::EndpointQEqualsRConjugate => "endpoint-q-equals-r-conjugate",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decision {
    Bounded,
    Unbounded,
}

impl Decision {
    pub fn name(self) -> &'static str {
        match self {
            Decision::Bounded => "BOUNDED",
            Decision::Unbounded => "UNBOUNDED",
        }
    }
}

/// Outcome of a region classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Bounded(CaseTag),
    Unbounded(Violation),
}

impl Verdict {
    pub fn decision(&self) -> Decision {
        match self {
            Verdict::Bounded(_) => Decision::Bounded,
            Verdict::Unbounded(_) => Decision::Unbounded,
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, Verdict::Bounded(_))
    }

    pub fn case_tag(&self) -> Option<CaseTag> {
        match self {
            Verdict::Bounded(tag) => Some(*tag),
            Verdict::Unbounded(_) => None,
        }
    }

    pub fn violated(&self) -> Option<Violation> {
        match self {
            Verdict::Bounded(_) => None,
            Verdict::Unbounded(v) => Some(*v),
        }
    }

    /// `case` column: the tag when bounded, the violated condition otherwise.
    pub fn detail(&self) -> &'static str {
        match self {
            Verdict::Bounded(tag) => tag.name(),
            Verdict::Unbounded(v) => v.name(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Bounded(tag) => write!(f, "BOUNDED case={tag}"),
            Verdict::Unbounded(v) => write!(f, "UNBOUNDED violated={v}"),
        }
    }
}

/// `r' = r/(r-1)`.
pub fn conjugate_exponent(r: &ExtScalar) -> Result<ExtScalar> {
    r.conjugate()
}

/// Exponent data every classifier needs: `1/q` and `1/r'`, both finite.
struct Reciprocals {
    inv_q: BigRational,
    inv_rc: BigRational,
}

impl Reciprocals {
    /// `None` when `q = inf`.
    fn new(r: &ExtScalar, q: &ExtScalar) -> Result<Option<Self>> {
        check_r(r)?;
        check_q(q)?;
        if q.is_infinite() {
            return Ok(None);
        }
        Ok(Some(Self {
            inv_q: q.recip_rational().expect("q > 0"),
            inv_rc: r.conjugate_recip()?,
        }))
    }
}

/// Unweighted extension `L^r -> L^q`: bounded iff `q = inf` or
/// (`q >= 3r'` and `q > 4`).
pub fn classify_unweighted(r: &ExtScalar, q: &ExtScalar) -> Result<Verdict> {
    let Some(Reciprocals { inv_q, inv_rc }) = Reciprocals::new(r, q)? else {
        return Ok(Verdict::Bounded(CaseTag::QInfinite));
    };
    if inv_q >= rat(1, 4) {
        return Ok(Verdict::Unbounded(Violation::QAtMostFour));
    }
    // q >= 3r'  <=>  1/q <= 1/(3r')
    let bound = inv_rc / rat(3, 1);
    Ok(match inv_q.cmp(&bound) {
        std::cmp::Ordering::Less => Verdict::Bounded(CaseTag::FzInterior),
        std::cmp::Ordering::Equal => Verdict::Bounded(CaseTag::FzEndpoint),
        std::cmp::Ordering::Greater => Verdict::Unbounded(Violation::QBelowThreeRConjugate),
    })
}

/// Endpoint side conditions shared by both weight families: `1 < r <= q`.
fn endpoint_r_conditions(r: &ExtScalar, q: &ExtScalar) -> Option<Violation> {
    if *r <= ExtScalar::one() {
        Some(Violation::EndpointRIsOne)
    } else if r > q {
        Some(Violation::EndpointRAboveQ)
    } else {
        None
    }
}

/// Separable weight `(1+|x|)^-alpha (1+|y|)^-beta`.
///
/// With `M = max(alpha, beta)` and `m = min(alpha, beta)` the operator is
/// bounded iff `q = inf`, or `alpha + beta > 2/q - 1/2` together with one of
///
/// * (i)   `M >= 1/q` and `2m > 2/q - 1/r'`
/// * (ii)  `M < 1/q` and `alpha + beta + m > 3/q - 1/r'`
/// * (iii) `1 < r <= q`, `M > 1/q` and `2m = 2/q - 1/r'`
/// * (iv)  `1 < r <= q`, `M < 1/q` and `alpha + beta + m = 3/q - 1/r'`
pub fn classify_separable(p: &SeparableParams) -> Result<Verdict> {
    let Some(Reciprocals { inv_q, inv_rc }) = Reciprocals::new(&p.r, &p.q)? else {
        return Ok(Verdict::Bounded(CaseTag::QInfinite));
    };
    let alpha = p
        .alpha
        .as_finite()
        .ok_or_else(|| Error::domain("alpha must be finite"))?;
    let beta = p
        .beta
        .as_finite()
        .ok_or_else(|| Error::domain("beta must be finite"))?;
    let big = rmax(alpha.clone(), beta.clone());
    let small = rmin(alpha.clone(), beta.clone());
    let sum = alpha + beta;

    if sum <= &inv_q * rat(2, 1) - rat(1, 2) {
        return Ok(Verdict::Unbounded(Violation::SeparableSum));
    }

    if big >= inv_q {
        let lhs = &small * rat(2, 1);
        let rhs = &inv_q * rat(2, 1) - &inv_rc;
        if lhs > rhs {
            return Ok(Verdict::Bounded(CaseTag::I));
        }
        if lhs < rhs {
            return Ok(Verdict::Unbounded(Violation::TwoMin));
        }
        if big == inv_q {
            return Ok(Verdict::Unbounded(Violation::EndpointMaxEqualsInvQ));
        }
        if let Some(v) = endpoint_r_conditions(&p.r, &p.q) {
            return Ok(Verdict::Unbounded(v));
        }
        Ok(Verdict::Bounded(CaseTag::Iii))
    } else {
        let lhs = &sum + &small;
        let rhs = &inv_q * rat(3, 1) - &inv_rc;
        if lhs > rhs {
            return Ok(Verdict::Bounded(CaseTag::Ii));
        }
        if lhs < rhs {
            return Ok(Verdict::Unbounded(Violation::SumPlusMin));
        }
        if let Some(v) = endpoint_r_conditions(&p.r, &p.q) {
            return Ok(Verdict::Unbounded(v));
        }
        Ok(Verdict::Bounded(CaseTag::Iv))
    }
}

/// `max(3/(2q) - 1/(2r'), 2/q - 1/r')`, the radial threshold for finite `q`.
pub fn radial_threshold(r: &ExtScalar, q: &ExtScalar) -> Result<Option<BigRational>> {
    let Some(Reciprocals { inv_q, inv_rc }) = Reciprocals::new(r, q)? else {
        return Ok(None);
    };
    Ok(Some(radial_threshold_from(&inv_q, &inv_rc)))
}

fn radial_threshold_from(inv_q: &BigRational, inv_rc: &BigRational) -> BigRational {
    let knapp = inv_q * rat(3, 2) - inv_rc * rat(1, 2);
    let dual = inv_q * rat(2, 1) - inv_rc;
    rmax(knapp, dual)
}

/// Radial weight `(1+|x|+|y|)^-gamma`.
///
/// Bounded iff `q = inf`, or `gamma > 2/q - 1/2` and either `gamma > T` or
/// (`gamma = T`, `1 < r <= q`, `q != r'`) where
/// `T = max(3/(2q) - 1/(2r'), 2/q - 1/r')`.
pub fn classify_radial(p: &RadialParams) -> Result<Verdict> {
    let Some(Reciprocals { inv_q, inv_rc }) = Reciprocals::new(&p.r, &p.q)? else {
        return Ok(Verdict::Bounded(CaseTag::QInfinite));
    };
    let gamma = p
        .gamma
        .as_finite()
        .ok_or_else(|| Error::domain("gamma must be finite"))?;
    if *gamma <= &inv_q * rat(2, 1) - rat(1, 2) {
        return Ok(Verdict::Unbounded(Violation::RadialGamma));
    }
    let threshold = radial_threshold_from(&inv_q, &inv_rc);
    if *gamma > threshold {
        return Ok(Verdict::Bounded(CaseTag::RadialStrict));
    }
    if *gamma < threshold {
        return Ok(Verdict::Unbounded(Violation::RadialThreshold));
    }
    if let Some(v) = endpoint_r_conditions(&p.r, &p.q) {
        return Ok(Verdict::Unbounded(v));
    }
    if inv_q == inv_rc {
        return Ok(Verdict::Unbounded(Violation::EndpointQEqualsRConjugate));
    }
    Ok(Verdict::Bounded(CaseTag::RadialEndpoint))
}
