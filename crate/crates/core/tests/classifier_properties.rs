use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use restriction_lab::exponents::{
    classify_radial, classify_separable, classify_unweighted, conjugate_exponent, CaseTag,
    Decision,
};
use restriction_lab::{ExtScalar, RadialParams, SeparableParams};

fn frac(num: u32, den: u32) -> ExtScalar {
    ExtScalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Nonnegative rational with a small denominator.
fn weight() -> impl Strategy<Value = ExtScalar> {
    (0u32..=60, 1u32..=24).prop_map(|(n, d)| frac(n, d))
}

fn exponent_r() -> impl Strategy<Value = ExtScalar> {
    prop_oneof![
        1 => Just(ExtScalar::one()),
        1 => Just(ExtScalar::Infinity),
        8 => (0u32..=24, 1u32..=24).prop_map(|(n, d)| frac(n.min(d), d).recip()),
    ]
}

fn exponent_q() -> impl Strategy<Value = ExtScalar> {
    prop_oneof![
        1 => Just(ExtScalar::Infinity),
        9 => (1u32..=48, 1u32..=24).prop_map(|(n, d)| frac(n, d).recip()),
    ]
}

fn separable(a: &ExtScalar, b: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> Decision {
    classify_separable(&SeparableParams::new(a.clone(), b.clone(), r.clone(), q.clone()).unwrap())
        .unwrap()
        .decision()
}

fn radial(g: &ExtScalar, r: &ExtScalar, q: &ExtScalar) -> Decision {
    classify_radial(&RadialParams::new(g.clone(), r.clone(), q.clone()).unwrap())
        .unwrap()
        .decision()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conjugate_is_an_involution(r in exponent_r()) {
        let twice = conjugate_exponent(&conjugate_exponent(&r).unwrap()).unwrap();
        prop_assert_eq!(twice, r);
    }

    #[test]
    fn separable_is_symmetric(a in weight(), b in weight(), r in exponent_r(), q in exponent_q()) {
        let ab = classify_separable(&SeparableParams::new(a.clone(), b.clone(), r.clone(), q.clone()).unwrap()).unwrap();
        let ba = classify_separable(&SeparableParams::new(b, a, r, q).unwrap()).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn separable_is_monotone(
        a in weight(), b in weight(), r in exponent_r(), q in exponent_q(),
        da in weight(), db in weight(), dr in weight(), dq in weight(),
    ) {
        if separable(&a, &b, &r, &q) == Decision::Bounded {
            let bigger = separable(&(&a + &da), &(&b + &db), &(&r + &dr), &(&q + &dq));
            prop_assert_eq!(bigger, Decision::Bounded);
        }
    }

    #[test]
    fn radial_is_monotone(
        g in weight(), r in exponent_r(), q in exponent_q(),
        dg in weight(), dr in weight(), dq in weight(),
    ) {
        if radial(&g, &r, &q) == Decision::Bounded {
            prop_assert_eq!(radial(&(&g + &dg), &(&r + &dr), &(&q + &dq)), Decision::Bounded);
        }
    }

    #[test]
    fn zero_weights_reduce_to_unweighted(r in exponent_r(), q in exponent_q()) {
        let plain = classify_unweighted(&r, &q).unwrap().decision();
        prop_assert_eq!(separable(&ExtScalar::zero(), &ExtScalar::zero(), &r, &q), plain);
        prop_assert_eq!(radial(&ExtScalar::zero(), &r, &q), plain);
    }

    #[test]
    fn bloom_sampson_line(n in 0u32..=120, d in 1u32..=120) {
        let a = frac(n, d);
        let two = ExtScalar::integer(2);
        let bounded = separable(&a, &a, &two, &two) == Decision::Bounded;
        prop_assert_eq!(bounded, a >= frac(1, 3));
    }

    #[test]
    fn infinite_q_is_always_bounded(a in weight(), b in weight(), r in exponent_r()) {
        let v = classify_separable(&SeparableParams::new(a, b, r, ExtScalar::Infinity).unwrap()).unwrap();
        prop_assert_eq!(v.case_tag(), Some(CaseTag::QInfinite));
    }
}
