//! Shared random-rational generators for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use restriction_lab::ExtScalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn s(text: &str) -> ExtScalar {
    text.parse().unwrap()
}

pub fn r(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ext(v: BigRational) -> ExtScalar {
    ExtScalar::from_rational(v).unwrap()
}

pub fn fin(x: &ExtScalar) -> BigRational {
    x.as_finite().unwrap().clone()
}

/// Rational in `[lo, hi]` with a small denominator, so boundary values
/// are hit with positive probability.
pub fn rational_in(rng: &mut impl Rng, lo: &BigRational, hi: &BigRational) -> BigRational {
    let den: i64 = rng.gen_range(1..=24);
    let span = (hi - lo) * BigRational::from_integer(den.into());
    let steps = span.floor().to_integer();
    let steps: i64 = steps.try_into().unwrap_or(i64::MAX / 4).min(10_000);
    let k = rng.gen_range(0..=steps.max(0));
    let cand = lo + r(k, den);
    if &cand > hi {
        lo.clone()
    } else {
        cand
    }
}

/// `1/q` drawn from `(0, 1]` or `q = inf` with small probability.
pub fn exponent_q(rng: &mut impl Rng) -> ExtScalar {
    if rng.gen_bool(0.05) {
        return ExtScalar::Infinity;
    }
    let inv = rational_in(rng, &r(1, 24), &r(2, 1));
    ext(inv).recip()
}

/// `r` in `[1, inf]`, with `r = 1` and `r = inf` drawn on purpose.
pub fn exponent_r(rng: &mut impl Rng) -> ExtScalar {
    match rng.gen_range(0..20) {
        0 => ExtScalar::one(),
        1 => ExtScalar::Infinity,
        _ => ext(rational_in(rng, &r(0, 1), &r(1, 1))).recip(),
    }
}

pub fn weight(rng: &mut impl Rng) -> ExtScalar {
    ext(rational_in(rng, &r(0, 1), &r(3, 2)))
}
