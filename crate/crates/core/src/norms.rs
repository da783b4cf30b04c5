//! Weighted Lebesgue quasinorms on truncated planar grids, and the weak
//! `L^{q,inf}` quasinorm of sampled one-dimensional data.
//!
//! Planar integrals use the midpoint rule, so `f` is evaluated once per
//! cell. Rows are evaluated in parallel, but every row is summed serially
//! and the row totals are combined in index order with compensated
//! summation, so results do not depend on the thread count.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analysis::quadrature::compensated_sum;
use crate::error::{Error, Result};

/// Share of each axis, per side, counted as the outer frame.
const FRAME: f64 = 0.05;

/// A rectangle `[x0, x1] x [y0, y1]` cut into `nx * ny` equal cells.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid2 {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Grid2 {
    pub fn new(x: (f64, f64), y: (f64, f64), nx: usize, ny: usize) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::domain("a grid needs at least 2 cells per axis"));
        }
        if !(x.1 > x.0 && y.1 > y.0) || !(x.0.is_finite() && x.1.is_finite() && y.0.is_finite() && y.1.is_finite()) {
            return Err(Error::domain("grid ranges must be finite and nonempty"));
        }
        Ok(Grid2 { x0: x.0, x1: x.1, y0: y.0, y1: y.1, nx, ny })
    }

    /// Grid over a rectangle with cells of side close to `step`.
    pub fn with_step(x: (f64, f64), y: (f64, f64), step: f64) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::domain("grid step must be positive"));
        }
        let nx = ((x.1 - x.0) / step).round().max(2.0) as usize;
        let ny = ((y.1 - y.0) / step).round().max(2.0) as usize;
        Grid2::new(x, y, nx, ny)
    }

    pub fn dx(&self) -> f64 {
        (self.x1 - self.x0) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y1 - self.y0) / self.ny as f64
    }

    pub fn cell_measure(&self) -> f64 {
        self.dx() * self.dy()
    }

    pub fn cells(&self) -> usize {
        self.nx.saturating_mul(self.ny)
    }

    pub fn x_mid(&self, i: usize) -> f64 {
        self.x0 + (i as f64 + 0.5) * self.dx()
    }

    pub fn y_mid(&self, j: usize) -> f64 {
        self.y0 + (j as f64 + 0.5) * self.dy()
    }

    fn in_frame(&self, x: f64, y: f64) -> bool {
        let (fx, fy) = (FRAME * (self.x1 - self.x0), FRAME * (self.y1 - self.y0));
        x < self.x0 + fx || x > self.x1 - fx || y < self.y0 + fy || y > self.y1 - fy
    }
}

/// Polynomial weights; the norm uses their reciprocals as factors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightSpec {
    None,
    /// `(1+|x|)^alpha (1+|y|)^beta`.
    Separable { alpha: f64, beta: f64 },
    /// `(1+|x|+|y|)^gamma`.
    Radial { gamma: f64 },
}

impl WeightSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            WeightSpec::None => true,
            WeightSpec::Separable { alpha, beta } => alpha >= 0.0 && beta >= 0.0,
            WeightSpec::Radial { gamma } => gamma >= 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain("weight exponents must be nonnegative"))
        }
    }

    /// The damping factor `w(x, y)^{-1}`.
    pub fn factor(&self, x: f64, y: f64) -> f64 {
        match *self {
            WeightSpec::None => 1.0,
            WeightSpec::Separable { alpha, beta } => {
                (1.0 + x.abs()).powf(-alpha) * (1.0 + y.abs()).powf(-beta)
            }
            WeightSpec::Radial { gamma } => (1.0 + x.abs() + y.abs()).powf(-gamma),
        }
    }
}

/// Value of a planar quasinorm and its truncation diagnostic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LqNorm {
    pub norm: f64,
    /// Share of the `q`-th power mass lying in the outer frame (the grid
    /// minus its central 90% x 90% rectangle).
    pub tail_fraction: f64,
}

/// `(sum_cells |f w^{-1}|^q |cell|)^{1/q}` over the midpoints of `grid`.
pub fn weighted_lq_2d<F>(f: F, grid: &Grid2, w: &WeightSpec, q: f64) -> Result<LqNorm>
where
    F: Fn(f64, f64) -> Complex64 + Sync,
{
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::domain(format!("q must be positive and finite, got {q}")));
    }
    w.validate()?;
    let rows: Vec<(f64, f64)> = (0..grid.ny)
        .into_par_iter()
        .map(|j| {
            let y = grid.y_mid(j);
            let mut total = Vec::with_capacity(grid.nx);
            let mut frame = Vec::new();
            for i in 0..grid.nx {
                let x = grid.x_mid(i);
                let v = (f(x, y).norm() * w.factor(x, y)).powf(q);
                total.push(v);
                if grid.in_frame(x, y) {
                    frame.push(v);
                }
            }
            (compensated_sum(total), compensated_sum(frame))
        })
        .collect();
    let mass = compensated_sum(rows.iter().map(|r| r.0));
    let frame = compensated_sum(rows.iter().map(|r| r.1));
    if !mass.is_finite() {
        return Err(Error::numerical("weighted_lq_2d", "non-finite integrand"));
    }
    let tail_fraction = if mass > 0.0 { frame / mass } else { 0.0 };
    Ok(LqNorm {
        norm: (mass * grid.cell_measure()).powf(1.0 / q),
        tail_fraction,
    })
}

/// Samples of a nonnegative function: `(value, measure)` pairs.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Sampled1 {
    samples: Vec<(f64, f64)>,
}

impl Sampled1 {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        for &(v, m) in &samples {
            if !(v >= 0.0 && v.is_finite() && m > 0.0 && m.is_finite()) {
                return Err(Error::domain(format!("invalid sample ({v}, {m})")));
            }
        }
        Ok(Sampled1 { samples })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Sampled1::new(self.samples.iter().map(|&(v, m)| (v * c.abs(), m)).collect())
    }

    pub fn total_measure(&self) -> f64 {
        compensated_sum(self.samples.iter().map(|s| s.1))
    }
}

/// `sup_t t |{f > t}|^{1/q}`; the maximum value when `q = inf`.
pub fn weak_lq_1d(s: &Sampled1, q: f64) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("q must be positive, got {q}")));
    }
    let mut sorted = s.samples.clone();
    sorted.sort_by(|a, b| b.0.total_cmp(&a.0));
    if q.is_infinite() {
        return Ok(sorted.first().map_or(0.0, |s| s.0));
    }
    let mut cumulative = 0.0;
    let mut best = 0.0f64;
    for (v, m) in sorted {
        cumulative += m;
        best = best.max(v * cumulative.powf(1.0 / q));
    }
    Ok(best)
}

/// `(sum v^q m)^{1/q}`, the strong counterpart of [`weak_lq_1d`].
pub fn lq_1d(s: &Sampled1, q: f64) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("q must be positive, got {q}")));
    }
    if q.is_infinite() {
        return weak_lq_1d(s, q);
    }
    Ok(compensated_sum(s.samples.iter().map(|&(v, m)| v.powf(q) * m)).powf(1.0 / q))
}
