//! The Fourier extension operator of the unit circle on the standard test
//! densities.
//!
//! Points of the circle are parametrized as `omega = (sin phi, cos phi)`, so
//! the cap and the singular density sit at the north pole `(0, 1)`. The
//! operator is taken without the `1/(2 pi)` prefactor:
//! `E F(p) = int F(omega) e^{i p . omega} d sigma(omega)`.

use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::analysis::bessel_j0;
use crate::analysis::quadrature::{gauss_legendre, GaussRule};
use crate::error::{Error, Result};
use crate::exponents::ExtScalar;

/// Minimum node count accepted by [`extend`].
pub const MIN_NODES: usize = 16;
const PANEL_NODES: usize = 16;

/// A test density on the circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    /// `F = 1` on the whole circle.
    Constant,
    /// Indicator of the arc `|phi| < arcsin(delta)`.
    Cap { delta: f64 },
    /// `F = phi^{-mu}` for `0 < phi <= delta`, zero elsewhere.
    PowerSingular { delta: f64, mu: f64 },
}

impl Density {
    pub fn cap(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::domain(format!("cap width must lie in (0, 1), got {delta}")));
        }
        Ok(Density::Cap { delta })
    }

    pub fn power_singular(delta: f64, mu: f64) -> Result<Self> {
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(Error::domain(format!("support must lie in (0, 1], got {delta}")));
        }
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::domain(format!("mu must lie in (0, 1), got {mu}")));
        }
        Ok(Density::PowerSingular { delta, mu })
    }
}

/// A frequency-space point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl std::ops::Neg for Point2 {
    type Output = Point2;

    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

fn panel_rule() -> &'static GaussRule {
    static RULE: OnceLock<Arc<GaussRule>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_NODES))
}

fn plane_wave(p: Point2, phi: f64) -> Complex64 {
    let (s, c) = phi.sin_cos();
    Complex64::from_polar(1.0, p.x * s + p.y * c)
}

/// Composite Gauss–Legendre over `[a, b]` with `panels` panels.
fn gl_complex(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> Complex64) -> Complex64 {
    let rule = panel_rule();
    let h = (b - a) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..panels {
        let lo = a + h * k as f64;
        let hi = if k + 1 == panels { b } else { lo + h };
        let (half, mid) = (0.5 * (hi - lo), 0.5 * (hi + lo));
        let mut panel = Complex64::new(0.0, 0.0);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            panel += f(mid + half * x) * *w;
        }
        acc += panel * half;
    }
    acc
}

/// Evaluates `E F(p)`.
///
/// `nodes` is the node budget for the full circle (raised to [`MIN_NODES`]
/// if smaller); arcs receive a share proportional to their length.
/// `nodes >= 8 (|p| + 10)` gives relative accuracy near `1e-8` for the
/// constant and cap densities and `1e-6` for the singular one.
pub fn extend(f: &Density, p: Point2, nodes: usize) -> Complex64 {
    let nodes = nodes.max(MIN_NODES);
    match *f {
        Density::Constant => {
            // Trapezoid rule on a periodic analytic integrand.
            let h = 2.0 * PI / nodes as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..nodes {
                acc += plane_wave(p, h * k as f64);
            }
            acc * h
        }
        Density::Cap { delta } => {
            let a = delta.asin();
            let share = (nodes as f64 * a / PI).ceil() as usize;
            let panels = share.max(MIN_NODES).div_ceil(PANEL_NODES);
            gl_complex(-a, a, panels, |phi| plane_wave(p, phi))
        }
        Density::PowerSingular { delta, mu } => {
            // phi = u^{1/(1-mu)} turns phi^{-mu} d phi into d u / (1 - mu).
            let expo = 1.0 / (1.0 - mu);
            let top = delta.powf(1.0 - mu);
            let share = (nodes as f64 * delta * expo / (2.0 * PI)).ceil() as usize;
            let panels = share.max(MIN_NODES).div_ceil(PANEL_NODES);
            let g = |u: f64| plane_wave(p, u.powf(expo));
            // u^{expo} is only finitely smooth at 0: refine the first panel
            // geometrically.
            let first = top / panels as f64;
            let mut acc = gl_complex(first, top, panels - 1, g);
            let mut hi = first;
            for _ in 0..12 {
                let lo = 0.5 * hi;
                acc += gl_complex(lo, hi, 1, g);
                hi = lo;
            }
            acc += gl_complex(0.0, hi, 1, g);
            acc * expo
        }
    }
}

/// `||F||_{L^r(S^1)}` from its closed form.
pub fn circle_norm(f: &Density, r: &ExtScalar) -> Result<f64> {
    if *r < ExtScalar::one() {
        return Err(Error::domain(format!("circle norm needs r >= 1, got {r}")));
    }
    let inv_r = r.recip().to_f64();
    match *f {
        Density::Constant => Ok((2.0 * PI).powf(inv_r)),
        Density::Cap { delta } => Ok((2.0 * delta.asin()).powf(inv_r)),
        Density::PowerSingular { delta, mu } => {
            if r.is_infinite() {
                return Err(Error::domain("the singular density is unbounded"));
            }
            let rf = r.to_f64();
            let e = 1.0 - mu * rf;
            if e <= 0.0 {
                return Err(Error::domain(format!("need mu r < 1, got mu r = {}", mu * rf)));
            }
            Ok((delta.powf(e) / e).powf(inv_r))
        }
    }
}

/// `2 pi J0(|p|)`, the exact extension of the constant density.
pub fn constant_reference(p: Point2) -> f64 {
    2.0 * PI * bessel_j0(p.norm())
}
