//! Bessel functions `J0`, `J1` and the extrema of `J0`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};
use std::io::Write;

use super::dd::{product, Dd};
use crate::error::{Error, Result};

/// Below this argument the power series is summed in double-double
/// arithmetic; above it the Hankel expansion is used.
pub const SERIES_CROSSOVER: f64 = 20.0;

/// Half-width of the intervals around `z_j` in the envelope bound
/// `|J0(r)| >~ sum_j j^{-1/2} 1_{[z_j - d, z_j + d]}(r)`.
pub const DELTA_ENV: f64 = 0.5;

/// `J_n(x)` for `n` in {0, 1} from `(x/2)^n sum_k (-x^2/4)^k / (k! (k+n)!)`.
fn series(x: f64, n: u32) -> f64 {
    let half = 0.5 * x;
    let y = product(half, half).neg();
    let mut term = Dd::new(1.0);
    let mut sum = term;
    for k in 1..400u32 {
        term = (term * y).div_f64(f64::from(k) * f64::from(k + n));
        sum = sum + term;
        if f64::from(k) > half && term.hi.abs() < 1e-24 {
            break;
        }
    }
    let v = sum.to_f64();
    if n == 1 {
        v * half
    } else {
        v
    }
}

/// Hankel expansion `sqrt(2/(pi x)) (P cos chi - Q sin chi)`; returns `(P, Q)`.
fn hankel_pq(x: f64, n: u32) -> (f64, f64) {
    let mu = 4.0 * f64::from(n * n);
    let (mut p, mut q) = (1.0, 0.0);
    let mut term = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..200u32 {
        let odd = f64::from(2 * k - 1);
        term *= (mu - odd * odd) / (f64::from(k) * 8.0 * x);
        let mag = term.abs();
        if mag > last || mag < 1e-18 {
            break;
        }
        last = mag;
        // Signs alternate in pairs: + a0, + a1, - a2, - a3, + a4, ...
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
    }
    (p, q)
}

fn asymptotic(x: f64, n: u32) -> f64 {
    let (p, q) = hankel_pq(x, n);
    let (s, c) = x.sin_cos();
    // chi = x - pi/4 (n = 0) or x - 3 pi/4 (n = 1), expanded to avoid
    // cancellation in the phase.
    let (cos_chi, sin_chi) = if n == 0 {
        ((c + s) * FRAC_1_SQRT_2, (s - c) * FRAC_1_SQRT_2)
    } else {
        ((s - c) * FRAC_1_SQRT_2, -(s + c) * FRAC_1_SQRT_2)
    };
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// Bessel function of the first kind of order zero.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= SERIES_CROSSOVER {
        series(x, 0)
    } else {
        asymptotic(x, 0)
    }
}

/// Bessel function of the first kind of order one; `J0' = -J1`.
pub fn bessel_j1(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let v = if x <= SERIES_CROSSOVER {
        series(x, 1)
    } else {
        asymptotic(x, 1)
    };
    sign * v
}

/// Root of `f` in a sign-change bracket, bisected to width `1e-12`.
fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, index: usize) -> Result<f64> {
    let mut fa = f(a);
    for _ in 0..200 {
        if b - a <= 1e-12 {
            return Ok(0.5 * (a + b));
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Err(Error::numerical(
        "bisection",
        format!("root {index} not bracketed to 1e-12"),
    ))
}

/// First `n` positive roots of `f`, bracketed on a `pi/2` scan grid from `start`.
fn scan_roots(f: impl Fn(f64) -> f64 + Copy, start: f64, n: usize) -> Result<Vec<f64>> {
    let mut roots = Vec::with_capacity(n);
    let mut a = start;
    let mut fa = f(a);
    while roots.len() < n {
        let b = a + FRAC_PI_2;
        let fb = f(b);
        if fb == 0.0 {
            roots.push(b);
        } else if (fa < 0.0) != (fb < 0.0) && fa != 0.0 {
            roots.push(bisect(f, a, b, roots.len() + 1)?);
        }
        a = b;
        fa = fb;
        if a > 1e7 {
            return Err(Error::numerical("root scan", "ran past x = 1e7"));
        }
    }
    Ok(roots)
}

/// First `n` positive zeros of `J0`.
pub fn j0_zeros(n: usize) -> Result<Vec<f64>> {
    scan_roots(bessel_j0, 0.0, n)
}

/// The first `n` positive local extrema of `J0` (the positive roots of `J1`).
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremaTable {
    z: Vec<f64>,
    values: Vec<f64>,
}

impl ExtremaTable {
    pub fn z(&self) -> &[f64] {
        &self.z
    }

    /// `J0(z_j)` in table order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// `min_j j^{1/2} |J0(z_j)|`.
    pub fn envelope_constant(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| ((i + 1) as f64).sqrt() * v.abs())
            .fold(f64::INFINITY, f64::min)
    }

    /// Writes `j,z_j,J0(z_j)` rows.
    pub fn write_csv(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "# delta_env={DELTA_ENV:.16e}")?;
        writeln!(out, "j,z_j,J0(z_j)")?;
        for (i, (z, v)) in self.z.iter().zip(&self.values).enumerate() {
            writeln!(out, "{},{:.16e},{:.16e}", i + 1, z, v)?;
        }
        Ok(())
    }
}

pub fn j0_extrema(n: usize) -> Result<ExtremaTable> {
    if n == 0 {
        return Err(Error::domain("need at least one extremum"));
    }
    // J1 > 0 on (0, 3.83), so the scan can start inside that interval.
    let z = scan_roots(bessel_j1, 1.0, n)?;
    let values = z.iter().map(|&x| bessel_j0(x)).collect();
    Ok(ExtremaTable { z, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j0(0.0), 1.0);
        assert_eq!(bessel_j1(0.0), 0.0);
    }

    #[test]
    fn first_zero() {
        assert!(bessel_j0(2.404825557695773).abs() < 1e-12);
        let zeros = j0_zeros(3).unwrap();
        assert!((zeros[0] - 2.404825557695773).abs() < 1e-11);
    }

    #[test]
    fn first_extremum() {
        let t = j0_extrema(2).unwrap();
        assert!((t.z()[0] - 3.8317059702075123).abs() < 1e-11);
        assert!(bessel_j1(t.z()[0]).abs() < 1e-10);
        let gap = t.z()[1] - t.z()[0];
        assert!(gap > 3.0 && gap < 3.3);
    }

    #[test]
    fn branches_agree_at_crossover() {
        for x in [19.0, 19.5, 20.0, 20.5, 21.0] {
            assert!((series(x, 0) - asymptotic(x, 0)).abs() < 1e-13, "J0 at {x}");
            assert!((series(x, 1) - asymptotic(x, 1)).abs() < 1e-13, "J1 at {x}");
        }
    }

    #[test]
    fn csv_dump_has_header() {
        let t = j0_extrema(3).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1), Some("j,z_j,J0(z_j)"));
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn zero_extrema_is_an_error() {
        assert!(j0_extrema(0).is_err());
    }
}
