//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its measured value and runtime; the test fails if any criterion does.

mod support;

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use restriction_lab::analysis::{bessel_j0, cosine_weight_kernel, fresnel_constant, j0_extrema};
use restriction_lab::cli::{scan_table, CsvTable, SCAN_HEADER};
use restriction_lab::experiments::{
    constant_density_sums, dual_scan, knapp_scan, l2_endpoint_scan, pitt_sweep, predicted_exponent, ConstantKind,
    PredictKind, WeightKind,
};
use restriction_lab::exponents::{classify_radial, classify_separable, Decision};
use restriction_lab::feasibility::{solve_one, solve_two, verify_one, verify_two};
use restriction_lab::operator::{extend, Density, Point2};
use restriction_lab::{RadialParams, SeparableParams};
use statrs::function::gamma::gamma;
use support::{ext, r, rational_in, rng, s};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

struct Ledger {
    failed: Vec<u32>,
}

impl Ledger {
    fn run(&mut self, id: u32, name: &str, budget: Duration, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = out.pass && in_time;
        let time_note = if in_time { String::new() } else { format!(" over budget {budget:?}") };
        println!(
            "criterion {id:>2} {} {name}: {} [{:.2?}{time_note}]",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took
        );
        if !pass {
            self.failed.push(id);
        }
    }
}

fn sep(a: &BigRational, b: &BigRational, inv_r: &BigRational, inv_q: &BigRational) -> Decision {
    let p = SeparableParams::new(ext(a.clone()), ext(b.clone()), ext(inv_r.clone()).recip(), ext(inv_q.clone()).recip());
    classify_separable(&p.unwrap()).unwrap().decision()
}

fn rad(g: &BigRational, inv_r: &BigRational, inv_q: &BigRational) -> Decision {
    let p = RadialParams::new(ext(g.clone()), ext(inv_r.clone()).recip(), ext(inv_q.clone()).recip());
    classify_radial(&p.unwrap()).unwrap().decision()
}

/// Rational in the open interval `(lo, hi)`.
fn open_in(rng: &mut impl Rng, lo: &BigRational, hi: &BigRational) -> BigRational {
    let d: i64 = rng.gen_range(2..=24);
    lo + (hi - lo) * r(rng.gen_range(1..d), d)
}

/// Threshold itself with probability 1/3, otherwise something above it.
fn at_or_above(rng: &mut impl Rng, t: &BigRational) -> BigRational {
    let t = t.max(&BigRational::zero()).clone();
    if rng.gen_bool(1.0 / 3.0) {
        t
    } else {
        &t + open_in(rng, &BigRational::zero(), &r(3, 2))
    }
}

fn bloom_sampson_line() -> Outcome {
    let mut rng = rng(101);
    let two = r(1, 2);
    let mut alphas: Vec<BigRational> = (0..197).map(|_| rational_in(&mut rng, &r(0, 1), &r(1, 1))).collect();
    alphas.extend([r(1, 3), r(33, 100), r(34, 100)]);
    let wrong = alphas.iter().filter(|a| (sep(a, a, &two, &two) == Decision::Bounded) != (**a >= r(1, 3))).count();
    outcome(wrong == 0, format!("{} alphas, {wrong} disagreements", alphas.len()))
}

fn fefferman_zygmund_region() -> Outcome {
    let mut rng = rng(102);
    let mut wrong = 0;
    for _ in 0..10_000 {
        let inv_r = rational_in(&mut rng, &r(0, 1), &r(1, 1));
        let inv_q = if rng.gen_bool(0.05) { r(0, 1) } else { open_in(&mut rng, &r(0, 1), &r(2, 1)) };
        let inv_rc = BigRational::one() - &inv_r;
        let expected = inv_q.is_zero() || (&inv_q * r(3, 1) <= inv_rc && inv_q < r(1, 4));
        let zero = BigRational::zero();
        let a = sep(&zero, &zero, &inv_r, &inv_q) == Decision::Bounded;
        let b = rad(&zero, &inv_r, &inv_q) == Decision::Bounded;
        wrong += usize::from(a != expected) + usize::from(b != expected);
    }
    outcome(wrong == 0, format!("10000 pairs, {wrong} disagreements"))
}

fn radial_concordance() -> Outcome {
    let mut rng = rng(103);
    let one = BigRational::one();
    let half = r(1, 2);
    let mut wrong = vec![0usize; 4];
    for _ in 0..1000 {
        // (a) 3/q <= 1/r', 4 < q < inf, gamma >= 0.
        let inv_q = open_in(&mut rng, &r(0, 1), &r(1, 4));
        let inv_rc = rational_in(&mut rng, &(&inv_q * r(3, 1)), &one);
        let g = at_or_above(&mut rng, &BigRational::zero());
        wrong[0] += usize::from(rad(&g, &(&one - &inv_rc), &inv_q) != Decision::Bounded);
        // (b) 2 <= q <= 4, q <= r, gamma > 2/q - 1/2.
        let inv_q = rational_in(&mut rng, &r(1, 4), &half);
        let inv_r = rational_in(&mut rng, &r(0, 1), &inv_q);
        let g = &inv_q * r(2, 1) - &half + open_in(&mut rng, &r(0, 1), &r(3, 2));
        wrong[1] += usize::from(rad(&g, &inv_r, &inv_q) != Decision::Bounded);
        // (c) q = 2 > r with r > 1, gamma >= 1/r.
        let inv_r = open_in(&mut rng, &half, &one);
        let g = at_or_above(&mut rng, &inv_r);
        wrong[2] += usize::from(rad(&g, &inv_r, &half) != Decision::Bounded);
        // (e) 2 < q < r' with r > 1, gamma >= 2/q - 1/r'.
        let inv_q = open_in(&mut rng, &r(0, 1), &half);
        let inv_rc = open_in(&mut rng, &r(0, 1), &inv_q);
        let g = at_or_above(&mut rng, &(&inv_q * r(2, 1) - &inv_rc));
        wrong[3] += usize::from(rad(&g, &(&one - &inv_rc), &inv_q) != Decision::Bounded);
    }
    // (d) endpoint gamma = 1/q with q = r' > 2.
    let mut d_wrong = 0;
    for _ in 0..200 {
        let inv_q = open_in(&mut rng, &r(0, 1), &half);
        d_wrong += usize::from(rad(&inv_q, &(&one - &inv_q), &inv_q) != Decision::Unbounded);
    }
    // (f) endpoint gamma = 3/(2q) - 1/(2r') outside (a)-(e), q != r', 1 < r <= q.
    let (mut f_wrong, mut f_count) = (0, 0);
    while f_count < 200 {
        let inv_q = open_in(&mut rng, &r(0, 1), &half);
        let inv_r = open_in(&mut rng, &r(0, 1), &one);
        let inv_rc = &one - &inv_r;
        let in_a = &inv_q * r(3, 1) <= inv_rc && inv_q < r(1, 4);
        let in_b = inv_q >= r(1, 4) && inv_r <= inv_q;
        let in_e = inv_rc < inv_q;
        let g = &inv_q * r(3, 2) - &inv_rc * r(1, 2);
        if in_a || in_b || in_e || inv_q == inv_rc || inv_r < inv_q || g <= &inv_q * r(2, 1) - &half {
            continue;
        }
        f_count += 1;
        f_wrong += usize::from(rad(&g, &inv_r, &inv_q) != Decision::Bounded);
    }
    let pass = wrong.iter().all(|w| *w == 0) && d_wrong == 0 && f_wrong == 0;
    outcome(pass, format!("(a,b,c,e) misses {wrong:?} of 1000 each, (d) misses {d_wrong}/200, (f) misses {f_wrong}/200"))
}

fn feasibility_iff() -> Outcome {
    let mut rng = rng(104);
    let (mut wrong, mut unverified, mut certs) = (0, 0, 0);
    for _ in 0..10_000 {
        let inv_q = r(rng.gen_range(1..=24), 12);
        let dr = rng.gen_range(1..=24);
        let inv_r = r(rng.gen_range(1..=dr), dr);
        let alpha = &inv_q * r(rng.gen_range(1..=48), 48);
        let beta = &alpha * r(rng.gen_range(0..=48), 48);
        let inv_rc = BigRational::one() - &inv_r;
        let expected = &alpha + &beta > &inv_q * r(2, 1) - r(1, 2) && &alpha + &beta * r(2, 1) >= &inv_q * r(3, 1) - &inv_rc;
        let (a, b, rr, q) = (ext(alpha), ext(beta), ext(inv_r).recip(), ext(inv_q).recip());
        let cert = solve_one(&a, &b, &rr, &q).unwrap();
        wrong += usize::from(cert.is_some() != expected);
        if let Some(c) = cert {
            certs += 1;
            unverified += usize::from(!verify_one(&c, &a, &b, &rr, &q).passed());
        }

        let inv_q = r(rng.gen_range(1..=36), 12);
        let inv_r = r(rng.gen_range(0..=dr), dr);
        let gamma = r(rng.gen_range(1..=72), 24);
        let inv_rc = BigRational::one() - &inv_r;
        let t = (&inv_q * r(3, 2) - &inv_rc * r(1, 2)).max(&inv_q * r(2, 1) - &inv_rc);
        let expected = gamma >= t && gamma > &inv_q * r(2, 1) - r(1, 2);
        let (g, rr, q) = (ext(gamma), ext(inv_r).recip(), ext(inv_q).recip());
        let cert = solve_two(&g, &rr, &q).unwrap();
        wrong += usize::from(cert.is_some() != expected);
        if let Some(c) = cert {
            certs += 1;
            unverified += usize::from(!verify_two(&c, &g, &rr, &q).passed());
        }
    }
    outcome(
        wrong == 0 && unverified == 0,
        format!("2x10000 tuples, {wrong} mismatches, {certs} certificates, {unverified} rejected by verifier"),
    )
}

fn extension_vs_bessel() -> Outcome {
    let mut rng = rng(105);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let rad = rng.gen_range(0.0..50.0);
        let phi = rng.gen_range(0.0..2.0 * PI);
        let p = Point2::new(rad * phi.cos(), rad * phi.sin());
        let nodes = (8.0 * (p.norm() + 10.0)).ceil() as usize;
        let e = extend(&Density::Constant, p, nodes);
        worst = worst.max((e - 2.0 * PI * bessel_j0(p.norm())).norm());
    }
    outcome(worst < 1e-8, format!("max error {worst:.3e} < 1e-8"))
}

fn kernel_asymptotics() -> Outcome {
    let lambda = 1e-3f64;
    let mut worst_law = 0.0f64;
    let mut worst_c = 0.0f64;
    let mut parts = Vec::new();
    for kappa in [0.3f64, 0.5, 0.7] {
        let c = fresnel_constant(kappa).unwrap();
        let dev = (lambda.powf(1.0 - kappa) * cosine_weight_kernel(kappa, lambda).unwrap() / c - 1.0).abs();
        worst_law = worst_law.max(dev);
        worst_c = worst_c.max((c - gamma(1.0 - kappa) * (PI * kappa / 2.0).sin()).abs());
        parts.push(format!("k={kappa}: {dev:.4}"));
    }
    outcome(
        worst_law < 0.02 && worst_c < 1e-6,
        format!("|lambda^(1-k) K / C - 1| at lambda=1e-3: {} (tol 0.02); C vs Gamma {worst_c:.1e}", parts.join(", ")),
    )
}

fn bessel_envelope() -> Outcome {
    let c = j0_extrema(1000).unwrap().envelope_constant();
    outcome(c >= 0.4, format!("min j^(1/2)|J0(z_j)| = {c:.6} >= 0.4"))
}

fn knapp_scaling() -> Outcome {
    let cases = [
        ("sep(0,0,q=6,r=2)", WeightKind::Separable(SeparableParams::parse("0", "0", "2", "6").unwrap()), true),
        ("sep(1/3,1/3,q=2,r=2)", WeightKind::Separable(SeparableParams::parse("1/3", "1/3", "2", "2").unwrap()), true),
        ("sep(1,1,q=2,r=2)", WeightKind::Separable(SeparableParams::parse("1", "1", "2", "2").unwrap()), true),
        ("rad(1/2,q=2,r=2)", WeightKind::Radial(RadialParams::parse("1/2", "2", "2").unwrap()), false),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, kind, two_sided) in cases {
        let res = knapp_scan(&kind, &[2, 3, 4, 5]).unwrap();
        let fitted = res.fitted_slope().unwrap();
        let predicted = res.predicted.as_ref().unwrap().slope_f64();
        let ok = fitted <= predicted + 0.15 && (!two_sided || (fitted - predicted).abs() <= 0.15);
        pass &= ok;
        parts.push(format!("{name} fitted {fitted:.3} predicted {predicted:.3}{}", if ok { "" } else { " (out of tolerance)" }));
    }
    outcome(pass, parts.join("; "))
}

fn constant_dichotomy() -> Outcome {
    let q4 = ConstantKind::Separable { alpha: s("0"), beta: s("0"), q: s("4") };
    let harmonic = constant_density_sums(&q4, &[100_000]).unwrap().partial[0].1 / (1e5f64).ln();
    let q5 = ConstantKind::Separable { alpha: s("0"), beta: s("0"), q: s("5") };
    let sums = constant_density_sums(&q5, &[10_000, 100_000]).unwrap();
    let tail = sums.partial[1].1 / sums.partial[0].1 - 1.0;
    outcome(
        (0.9..=1.1).contains(&harmonic) && tail < 0.1,
        format!("q=4: S_N/ln N = {harmonic:.4}; q=5: S_1e5/S_1e4 - 1 = {tail:.2e}"),
    )
}

fn l2_endpoint() -> Outcome {
    let res = l2_endpoint_scan(&s("5/18"), &s("5/18"), &s("3"), 0.25, &[3, 4, 5, 6, 7]).unwrap();
    let fitted = res.fitted_slope().unwrap();
    outcome((fitted + 1.0 / 3.0).abs() <= 0.1, format!("slope {fitted:.4} vs -1/3 (tol 0.1)"))
}

fn dual_blowups() -> Outcome {
    let sep = WeightKind::Separable(SeparableParams::parse("3/5", "1/8", "4", "2").unwrap());
    let rad = WeightKind::Radial(RadialParams::parse("14/15", "3", "5/4").unwrap());
    let a = dual_scan(&sep, &[3, 4, 5, 6, 7]).unwrap().fitted_slope().unwrap();
    let b = dual_scan(&rad, &[3, 4, 5, 6, 7]).unwrap().fitted_slope().unwrap();
    outcome(a >= 0.15 && b >= 0.31, format!("separable growth {a:.3} (>= 0.15), radial growth {b:.3} (>= 0.31)"))
}

fn pitt_uniformity() -> Outcome {
    let scales: Vec<f64> = (-6..=6).map(|k| 2f64.powi(k)).collect();
    let sweep = pitt_sweep(&s("1/2"), &s("2"), &s("2"), &scales).unwrap();
    let spread = sweep.max_ratio / sweep.min_ratio;
    outcome(
        spread < 4.0,
        format!("max {:.4} min {:.4} max/min {spread:.3} (< 4)", sweep.max_ratio, sweep.min_ratio),
    )
}

fn prediction_consistency() -> Outcome {
    let mut rng = rng(113);
    let mut wrong = 0;
    for _ in 0..1000 {
        let (a, b, rr) = (support::weight(&mut rng), support::weight(&mut rng), support::exponent_r(&mut rng));
        let q = ext(rational_in(&mut rng, &r(1, 24), &r(2, 1))).recip();
        let v = classify_separable(&SeparableParams::new(a.clone(), b.clone(), rr.clone(), q.clone()).unwrap()).unwrap();
        let knapp = predicted_exponent(&PredictKind::Separable { alpha: a.clone(), beta: b.clone(), q: q.clone(), r: rr }).unwrap();
        let constant = predicted_exponent(&PredictKind::Constant { weight_sum: &a + &b, q }).unwrap();
        wrong += usize::from(v.is_bounded() && (knapp.predicts_blowup() || constant.slope >= -BigRational::one()));

        let (g, rr) = (support::weight(&mut rng), support::exponent_r(&mut rng));
        let q = ext(rational_in(&mut rng, &r(1, 24), &r(2, 1))).recip();
        let v = classify_radial(&RadialParams::new(g.clone(), rr.clone(), q.clone()).unwrap()).unwrap();
        let knapp = predicted_exponent(&PredictKind::Radial { gamma: g.clone(), q: q.clone(), r: rr }).unwrap();
        let constant = predicted_exponent(&PredictKind::Constant { weight_sum: g, q }).unwrap();
        wrong += usize::from(v.is_bounded() && (knapp.predicts_blowup() || constant.slope >= -BigRational::one()));
    }
    outcome(wrong == 0, format!("2x1000 tuples, {wrong} contradictions"))
}

fn cli_goldens() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&[&str], &str); 3] = [
        (&["classify", "--kind", "separable", "--alpha", "1/3", "--beta", "1/3", "--r", "2", "--q", "2"], "classify_separable.txt"),
        (&["classify", "--kind", "radial", "--gamma", "1/4", "--r", "4/3", "--q", "4"], "classify_radial.txt"),
        (&["feasibility", "--prop", "one", "--alpha", "1/5", "--beta", "0", "--r", "2", "--q", "2"], "feasibility_one.txt"),
    ];
    let mut mismatched = Vec::new();
    for (args, file) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_restriction-lab")).args(args).output().unwrap();
        let expected = std::fs::read(dir.join(file)).unwrap();
        if out.stdout != expected || !out.status.success() {
            mismatched.push(file);
        }
    }
    let kind = WeightKind::Radial(RadialParams::parse("1/2", "2", "2").unwrap());
    let table = scan_table(&knapp_scan(&kind, &[1, 2, 3]).unwrap());
    let text = table.to_string_lossy();
    let back = CsvTable::parse(&text).unwrap();
    let round_trip = back == table && back.to_string_lossy() == text && back.header == SCAN_HEADER;
    outcome(
        mismatched.is_empty() && round_trip,
        format!("golden mismatches {mismatched:?}, csv round trip {}", if round_trip { "exact" } else { "broken" }),
    )
}

#[test]
fn acceptance() {
    let mut ledger = Ledger { failed: Vec::new() };
    let sec = Duration::from_secs;
    ledger.run(1, "separable diagonal line at r = q = 2", sec(1), bloom_sampson_line);
    ledger.run(2, "unweighted region for both weight families", sec(1), fefferman_zygmund_region);
    ledger.run(3, "radial sufficient regions and endpoints", sec(1), radial_concordance);
    ledger.run(4, "feasibility solvers match their inequalities", sec(5), feasibility_iff);
    ledger.run(5, "constant density extends to 2 pi J0", sec(10), extension_vs_bessel);
    ledger.run(6, "small-lambda kernel law and constant", sec(5), kernel_asymptotics);
    ledger.run(7, "Bessel extrema envelope", sec(5), bessel_envelope);
    ledger.run(8, "Knapp scaling slopes", sec(600), knapp_scaling);
    ledger.run(9, "constant-density series dichotomy", sec(1), constant_dichotomy);
    ledger.run(10, "L2 endpoint blow-up slope", sec(120), l2_endpoint);
    ledger.run(11, "dual blow-up growth", sec(240), dual_blowups);
    ledger.run(12, "Pitt dilation uniformity", sec(60), pitt_uniformity);
    ledger.run(13, "predictions never contradict classifiers", sec(5), prediction_consistency);
    ledger.run(14, "CLI goldens and CSV round trip", sec(1), cli_goldens);
    assert!(ledger.failed.is_empty(), "failed criteria: {:?}", ledger.failed);
}
