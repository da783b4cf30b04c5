use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative exact rational, or infinity.
///
/// This is the type of every Lebesgue exponent and weight exponent in the
/// crate. Values are kept in lowest terms with a positive denominator, so
/// structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtScalar {
    Finite(BigRational),
    Infinity,
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar::Finite(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtScalar::Finite(BigRational::one())
    }

    pub fn infinity() -> Self {
        ExtScalar::Infinity
    }

    pub fn integer(n: u64) -> Self {
        ExtScalar::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; fails for a zero denominator or a negative value.
    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::domain(format!("exponent {value} is negative")));
        }
        Ok(ExtScalar::Finite(value))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtScalar::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtScalar::Finite(v) if v.is_zero())
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtScalar::Finite(v) => Some(v),
            ExtScalar::Infinity => None,
        }
    }

    /// Total reciprocal: `1/0 = inf`, `1/inf = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtScalar::Infinity => ExtScalar::zero(),
            ExtScalar::Finite(v) if v.is_zero() => ExtScalar::Infinity,
            ExtScalar::Finite(v) => ExtScalar::Finite(v.recip()),
        }
    }

    /// Reciprocal as a finite rational; `None` only for zero.
    pub fn recip_rational(&self) -> Option<BigRational> {
        match self.recip() {
            ExtScalar::Finite(v) => Some(v),
            ExtScalar::Infinity => None,
        }
    }

    /// Hölder conjugate `r' = r/(r-1)` with `1' = inf` and `inf' = 1`.
    pub fn conjugate(&self) -> Result<Self> {
        match self {
            ExtScalar::Infinity => Ok(ExtScalar::one()),
            ExtScalar::Finite(r) => {
                let one = BigRational::one();
                match r.cmp(&one) {
                    Ordering::Less => Err(Error::domain(format!(
                        "conjugate exponent needs r >= 1, got {r}"
                    ))),
                    Ordering::Equal => Ok(ExtScalar::Infinity),
                    Ordering::Greater => Ok(ExtScalar::Finite(r / (r - &one))),
                }
            }
        }
    }

    /// `1/r'` for `r` in `[1, inf]`, always finite and in `[0, 1]`.
    pub fn conjugate_recip(&self) -> Result<BigRational> {
        let conj = self.conjugate()?;
        Ok(conj
            .recip_rational()
            .expect("conjugate exponent is never zero"))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtScalar::Infinity => f64::INFINITY,
            ExtScalar::Finite(v) => v.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for ExtScalar {
    fn default() -> Self {
        ExtScalar::zero()
    }
}

impl Ord for ExtScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtScalar::Infinity, ExtScalar::Infinity) => Ordering::Equal,
            (ExtScalar::Infinity, _) => Ordering::Greater,
            (_, ExtScalar::Infinity) => Ordering::Less,
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExtScalar {
    type Output = ExtScalar;

    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        match (self, rhs) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => ExtScalar::Finite(a + b),
            _ => ExtScalar::Infinity,
        }
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;

    fn add(self, rhs: ExtScalar) -> ExtScalar {
        &self + &rhs
    }
}

/// `0 * inf` is taken to be `0`.
impl Mul for &ExtScalar {
    type Output = ExtScalar;

    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        match (self, rhs) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => ExtScalar::Finite(a * b),
            (a, b) if a.is_zero() || b.is_zero() => ExtScalar::zero(),
            _ => ExtScalar::Infinity,
        }
    }
}

impl From<u64> for ExtScalar {
    fn from(n: u64) -> Self {
        ExtScalar::integer(n)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Infinity => f.write_str("inf"),
            ExtScalar::Finite(v) if v.is_integer() => write!(f, "{}", v.numer()),
            ExtScalar::Finite(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}

/// Accepts `inf`, a nonnegative integer, or `p/q`. Decimal notation is
/// rejected: exponents on the region boundaries must be exact.
impl FromStr for ExtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let fail = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        if matches!(text, "inf" | "infinity" | "Inf" | "INF" | "∞") {
            return Ok(ExtScalar::Infinity);
        }
        if text.contains(['.', 'e', 'E']) {
            return Err(fail("decimal notation is not exact; write p/q"));
        }
        let parse_int = |part: &str| -> Result<BigInt> {
            let part = part.trim();
            if part.is_empty() || !part.chars().all(|c| c.is_ascii_digit()) {
                return Err(fail("expected a nonnegative integer, p/q, or inf"));
            }
            part.parse::<BigInt>()
                .map_err(|_| fail("expected a nonnegative integer, p/q, or inf"))
        };
        let value = match text.split_once('/') {
            Some((num, den)) => {
                let (num, den) = (parse_int(num)?, parse_int(den)?);
                if den.is_zero() {
                    return Err(fail("zero denominator"));
                }
                BigRational::new(num, den)
            }
            None => BigRational::from_integer(parse_int(text)?),
        };
        Ok(ExtScalar::Finite(value))
    }
}

impl Serialize for ExtScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// `max` over signed rationals.
pub(crate) fn rmax(a: BigRational, b: BigRational) -> BigRational {
    if a >= b {
        a
    } else {
        b
    }
}

/// `min` over signed rationals.
pub(crate) fn rmin(a: BigRational, b: BigRational) -> BigRational {
    if a <= b {
        a
    } else {
        b
    }
}

/// Shorthand for a signed rational constant.
pub(crate) fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> ExtScalar {
        text.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(s("2").conjugate().unwrap(), s("2"));
        assert_eq!(s("1").conjugate().unwrap(), ExtScalar::Infinity);
        assert_eq!(s("4/3").conjugate().unwrap(), s("4"));
        assert_eq!(ExtScalar::Infinity.conjugate().unwrap(), s("1"));
    }

    #[test]
    fn conjugate_rejects_below_one() {
        assert!(matches!(s("1/2").conjugate(), Err(Error::Domain(_))));
        assert!(s("0").conjugate().is_err());
    }

    #[test]
    fn reciprocal_is_total() {
        assert_eq!(ExtScalar::Infinity.recip(), ExtScalar::zero());
        assert_eq!(ExtScalar::zero().recip(), ExtScalar::Infinity);
        assert_eq!(s("3/7").recip(), s("7/3"));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(s("4/6"), s("2/3"));
        assert_eq!(s("6/3").to_string(), "2");
        assert_eq!(s("2/4").to_string(), "1/2");
        assert_eq!(ExtScalar::ratio(3, 9).unwrap(), s("1/3"));
    }

    #[test]
    fn infinity_is_maximal() {
        assert!(ExtScalar::Infinity > s("1000000000000/3"));
        assert!(s("1/3") < s("1/2"));
    }

    #[test]
    fn parse_rejects_decimals_and_signs() {
        assert!("0.5".parse::<ExtScalar>().is_err());
        assert!("1e3".parse::<ExtScalar>().is_err());
        assert!("-1/2".parse::<ExtScalar>().is_err());
        assert!("1/0".parse::<ExtScalar>().is_err());
        assert!("".parse::<ExtScalar>().is_err());
        assert_eq!(s("inf"), ExtScalar::Infinity);
    }

    #[test]
    fn negative_rationals_are_rejected() {
        assert!(ExtScalar::ratio(-1, 2).is_err());
        assert!(ExtScalar::ratio(1, -2).is_err());
    }

    #[test]
    fn serde_uses_text_form() {
        let json = serde_json::to_string(&s("5/18")).unwrap();
        assert_eq!(json, "\"5/18\"");
        let back: ExtScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s("5/18"));
    }
}
