//! Behaviour of the experiment scans on small configurations.

use restriction_lab::cli::scan_table;
use restriction_lab::experiments::{
    dual_scan, knapp_scan, l2_endpoint_scan, pitt_sweep, PittFamily, ScanResult, WeightKind,
};
use restriction_lab::exponents::{RadialParams, SeparableParams};
use restriction_lab::{Error, ExtScalar};

fn s(t: &str) -> ExtScalar {
    t.parse().unwrap()
}

fn with_threads<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap().install(f)
}

fn csv_bytes(r: &ScanResult) -> String {
    scan_table(r).to_string_lossy()
}

#[test]
fn scans_are_byte_identical_across_thread_counts() {
    let kind = WeightKind::Radial(RadialParams::parse("1/2", "2", "2").unwrap());
    let a = with_threads(1, || knapp_scan(&kind, &[1, 2, 3]).unwrap());
    let b = with_threads(3, || knapp_scan(&kind, &[1, 2, 3]).unwrap());
    assert_eq!(csv_bytes(&a), csv_bytes(&b));
    let l2 = |t| with_threads(t, || l2_endpoint_scan(&s("5/18"), &s("5/18"), &s("3"), 0.25, &[3, 4, 5]).unwrap());
    assert_eq!(csv_bytes(&l2(1)), csv_bytes(&l2(4)));
    let dual = WeightKind::Separable(SeparableParams::parse("3/5", "1/8", "4", "2").unwrap());
    let d = |t| with_threads(t, || dual_scan(&dual, &[3, 4, 5]).unwrap());
    assert_eq!(csv_bytes(&d(1)), csv_bytes(&d(2)));
}

#[test]
fn knapp_budget_is_checked_first() {
    let kind = WeightKind::Separable(SeparableParams::parse("0", "0", "2", "6").unwrap());
    assert!(matches!(knapp_scan(&kind, &[2, 3, 20]), Err(Error::Config(_))));
}

/// At `r = 2` the ratio converges as `eps -> 0`: its increments shrink
/// geometrically and stay positive.
#[test]
fn l2_boundary_ratio_converges() {
    let res = l2_endpoint_scan(&s("1/3"), &s("1/3"), &s("2"), 0.25, &[3, 4, 5, 6, 7, 8, 9]).unwrap();
    let ratios: Vec<f64> = res.samples.iter().map(|x| x.ratio).collect();
    let steps: Vec<f64> = ratios.windows(2).map(|w| w[1] - w[0]).collect();
    for w in steps.windows(2) {
        assert!(w[0] > 0.0 && w[1] < 0.75 * w[0], "ratios {ratios:?}");
    }
    // The local slope over the last octaves tends to zero.
    let last = (ratios[6] / ratios[5]).log2() / -1.0;
    assert!(last.abs() < 0.05, "local slope {last}");
}

#[test]
fn l2_rejects_broken_identity() {
    assert!(matches!(
        l2_endpoint_scan(&s("1/3"), &s("1/4"), &s("2"), 0.25, &[3, 4, 5]),
        Err(Error::Domain(_))
    ));
}

#[test]
fn dual_growth_cancels_when_r_equals_q() {
    let kind = WeightKind::Separable(SeparableParams::parse("3/5", "1/4", "2", "2").unwrap());
    let res = dual_scan(&kind, &[3, 4, 5, 6, 7]).unwrap();
    assert_eq!(res.metadata["predicted_slope"], "0");
    let fit = res.fitted.unwrap().slope;
    assert!(fit.abs() <= 0.1, "fitted {fit}");
}

#[test]
fn pitt_plancherel_and_boundary_cases_are_bounded() {
    let scales: Vec<f64> = (-6..=6).map(|k| 2f64.powi(k)).collect();
    let plancherel = pitt_sweep(&s("0"), &s("2"), &s("2"), &scales).unwrap();
    let bound = (2.0 * std::f64::consts::PI).sqrt();
    assert!(plancherel.max_ratio <= bound * (1.0 + 1e-6), "{}", plancherel.max_ratio);
    let edge = pitt_sweep(&s("1"), &s("1"), &s("1"), &scales).unwrap();
    assert!(edge.max_ratio <= 2.0 * (1.0 + 1e-6), "{}", edge.max_ratio);
}

#[test]
fn pitt_large_scale_ratio_stays_comparable() {
    let sweep = pitt_sweep(&s("1/2"), &s("2"), &s("2"), &[1.0, 64.0]).unwrap();
    let big = sweep.ratio_at(PittFamily::Gaussian, 64.0).unwrap();
    let unit = sweep.ratio_at(PittFamily::Gaussian, 1.0).unwrap();
    assert!(big / unit < 4.0, "{big} / {unit}");
}
