//! Gauss–Legendre rules and composite panel helpers.

use std::collections::HashMap;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex, OnceLock};

use gauss_quad::legendre::GaussLegendre;

/// Nodes and weights of an `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// `int_a^b f` with this rule on a single panel.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Same rule on `panels` equal subintervals of `[a, b]`.
    pub fn composite(&self, a: f64, b: f64, panels: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
        let panels = panels.max(1);
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|k| {
                let lo = a + h * k as f64;
                let hi = if k + 1 == panels { b } else { lo + h };
                self.integrate(lo, hi, &mut f)
            })
            .sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Cached `n`-point rule; rules are computed once per process.
pub fn gauss_legendre(n: usize) -> Arc<GaussRule> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussRule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    map.entry(n.max(1))
        .or_insert_with(|| {
            let rule = GaussLegendre::new(NonZeroUsize::new(n.max(1)).expect("n >= 1"));
            let (nodes, weights) = rule.into_iter().unzip();
            Arc::new(GaussRule { nodes, weights })
        })
        .clone()
}

/// Panel breakpoints of a mesh on `[0, h]` graded toward 0: `h (k/n)^p`.
pub fn graded_breaks(h: f64, panels: usize, grading: f64) -> Vec<f64> {
    (0..=panels)
        .map(|k| h * (k as f64 / panels as f64).powf(grading))
        .collect()
}

/// Neumaier-compensated sum of a sequence, independent of how it was produced.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let rule = gauss_legendre(5);
        let v = rule.integrate(0.0, 2.0, |x| x.powi(9));
        assert!((v - 102.4).abs() < 1e-11);
    }

    #[test]
    fn composite_matches_closed_form() {
        let rule = gauss_legendre(8);
        let v = rule.composite(0.0, 10.0, 10, f64::sin);
        assert!((v - (1.0 - 10f64.cos())).abs() < 1e-13);
    }

    #[test]
    fn cache_returns_same_rule() {
        assert!(Arc::ptr_eq(&gauss_legendre(12), &gauss_legendre(12)));
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let v = compensated_sum([1e16, 1.0, -1e16, 1.0]);
        assert_eq!(v, 2.0);
    }

    #[test]
    fn graded_breaks_cluster_at_zero() {
        let b = graded_breaks(1.0, 4, 3.0);
        assert_eq!(b[0], 0.0);
        assert_eq!(b[4], 1.0);
        assert!((b[1] - 1.0 / 64.0).abs() < 1e-15);
    }
}
