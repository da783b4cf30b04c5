use num_complex::Complex64;
use proptest::prelude::*;
use restriction_lab::norms::{lq_1d, weak_lq_1d, weighted_lq_2d, Grid2, Sampled1, WeightSpec};
use statrs::function::erf::erf;

fn gauss(x: f64, y: f64) -> Complex64 {
    Complex64::new((-x * x - y * y).exp(), 0.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn homogeneity(c in 0.01f64..100.0, q in 0.5f64..6.0, a in 0.0f64..2.0) {
        let g = Grid2::new((-3.0, 3.0), (-2.0, 4.0), 40, 50).unwrap();
        let w = WeightSpec::Separable { alpha: a, beta: 0.5 * a };
        let base = weighted_lq_2d(gauss, &g, &w, q).unwrap().norm;
        let scaled = weighted_lq_2d(|x, y| gauss(x, y) * c, &g, &w, q).unwrap().norm;
        prop_assert!((scaled / (c * base) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn heavier_weights_give_smaller_norms(g1 in 0.0f64..2.0, dg in 0.0f64..1.0, q in 1.0f64..4.0) {
        let g = Grid2::new((-5.0, 5.0), (-5.0, 5.0), 30, 30).unwrap();
        let light = weighted_lq_2d(gauss, &g, &WeightSpec::Radial { gamma: g1 }, q).unwrap().norm;
        let heavy = weighted_lq_2d(gauss, &g, &WeightSpec::Radial { gamma: g1 + dg }, q).unwrap().norm;
        prop_assert!(heavy <= light * (1.0 + 1e-14));
    }

    #[test]
    fn weak_norm_is_dominated_by_strong(vals in prop::collection::vec((0.0f64..10.0, 0.01f64..2.0), 1..60), q in 0.5f64..5.0) {
        let s = Sampled1::new(vals).unwrap();
        prop_assert!(weak_lq_1d(&s, q).unwrap() <= lq_1d(&s, q).unwrap() * (1.0 + 1e-12));
    }
}

/// The midpoint rule on a smooth integrand converges at second order.
#[test]
fn refinement_ratio_is_second_order() {
    let exact = {
        let one_d = (std::f64::consts::PI / 2.0).sqrt() * erf(2f64.sqrt());
        one_d * one_d
    };
    let err = |n: usize| {
        let g = Grid2::new((-1.0, 1.0), (-1.0, 1.0), n, n).unwrap();
        let v = weighted_lq_2d(gauss, &g, &WeightSpec::None, 2.0).unwrap().norm;
        (v * v - exact).abs()
    };
    for n in [8, 16, 32, 64] {
        let ratio = err(n) / err(2 * n);
        assert!((3.5..=4.5).contains(&ratio), "n={n}: {ratio}");
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let g = Grid2::new((-7.0, 7.0), (-3.0, 9.0), 301, 257).unwrap();
    let w = WeightSpec::Separable { alpha: 0.3, beta: 0.7 };
    let f = |x: f64, y: f64| Complex64::from_polar((-0.1 * (x * x + y * y)).exp(), x * y);
    let run = |t: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
        pool.install(|| weighted_lq_2d(f, &g, &w, 2.5).unwrap())
    };
    let one = run(1);
    for t in [2, 3, 7] {
        let other = run(t);
        assert_eq!(one.norm.to_bits(), other.norm.to_bits());
        assert_eq!(one.tail_fraction.to_bits(), other.tail_fraction.to_bits());
    }
}
