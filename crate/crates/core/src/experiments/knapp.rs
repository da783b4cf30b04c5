use std::f64::consts::PI;

use super::predicted::{predicted_exponent, PredictKind};
use super::scan::{meta, ScanResult, ScanSample};
use super::WeightKind;
use crate::error::{Error, Result};
use crate::norms::{weighted_lq_2d, Grid2, WeightSpec};
use crate::operator::{circle_norm, extend, Density, Point2};

/// Cell side of the evaluation grid.
pub const KNAPP_STEP: f64 = 0.25;
/// Largest number of grid cells a Knapp scan may evaluate per cap.
pub const KNAPP_CELL_BUDGET: usize = 20_000_000;

/// Half-widths of the dual box `|x| <= 4/delta`, `|y| <= max(4, (pi/4) delta^-2)`.
pub fn knapp_box(delta: f64) -> (f64, f64) {
    (4.0 / delta, (0.25 * PI / (delta * delta)).max(4.0))
}

/// Grid over the half box `x >= 0`; the integrand is even in `x`.
fn half_grid(delta: f64) -> Result<Grid2> {
    let (hx, hy) = knapp_box(delta);
    Grid2::with_step((0.0, hx), (-hy, hy), KNAPP_STEP)
}

/// Ratio of the weighted `L^q` norm of the extended cap to its `L^r` norm,
/// for `delta = 2^-k` over `delta_exps`.
pub fn knapp_scan(kind: &WeightKind, delta_exps: &[u32]) -> Result<ScanResult> {
    if delta_exps.len() < 3 {
        return Err(Error::Config("a Knapp scan needs at least 3 cap widths".into()));
    }
    if delta_exps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("cap exponents must be strictly increasing".into()));
    }
    if delta_exps[0] == 0 || delta_exps[delta_exps.len() - 1] > 30 {
        return Err(Error::Config("cap exponents must lie in 1..=30".into()));
    }
    // Budget check for every cap before anything is evaluated.
    for &k in delta_exps {
        let cells = half_grid(0.5f64.powi(k as i32))?.cells();
        if cells > KNAPP_CELL_BUDGET {
            return Err(Error::Config(format!(
                "cap width 2^-{k} needs {cells} grid cells, budget is {KNAPP_CELL_BUDGET}"
            )));
        }
    }
    let (weight, q, r, predict) = match kind {
        WeightKind::Separable(p) => {
            let (a, b) = (p.alpha.to_f64(), p.beta.to_f64());
            let w = WeightSpec::Separable { alpha: a.max(b), beta: a.min(b) };
            let kind = PredictKind::Separable {
                alpha: p.alpha.clone(),
                beta: p.beta.clone(),
                q: p.q.clone(),
                r: p.r.clone(),
            };
            (w, p.q.clone(), p.r.clone(), kind)
        }
        WeightKind::Radial(p) => {
            let w = WeightSpec::Radial { gamma: p.gamma.to_f64() };
            let kind = PredictKind::Radial { gamma: p.gamma.clone(), q: p.q.clone(), r: p.r.clone() };
            (w, p.q.clone(), p.r.clone(), kind)
        }
    };
    let predicted = predicted_exponent(&predict)?;
    let qf = q.to_f64();
    let mut samples = Vec::with_capacity(delta_exps.len());
    let mut worst_tail = 0.0f64;
    for &k in delta_exps {
        let delta = 0.5f64.powi(k as i32);
        let cap = Density::cap(delta)?;
        let grid = half_grid(delta)?;
        let half = weighted_lq_2d(
            |x, y| {
                let p = Point2::new(x, y);
                extend(&cap, p, (8.0 * (p.norm() + 10.0)).ceil() as usize)
            },
            &grid,
            &weight,
            qf,
        )?;
        worst_tail = worst_tail.max(half.tail_fraction);
        let lhs = half.norm * 2f64.powf(1.0 / qf);
        samples.push(ScanSample::new(delta, lhs, circle_norm(&cap, &r)?));
    }
    let mut metadata = kind.metadata();
    metadata.extend(meta([
        ("experiment", "knapp".into()),
        ("delta_exps", join(delta_exps)),
        ("grid_policy", format!("|x|<=4/delta,|y|<=max(4,(pi/4)/delta^2),step={KNAPP_STEP},nodes=8(|p|+10)")),
        ("max_tail_fraction", format!("{worst_tail:.16e}")),
        ("param", "delta".into()),
    ]));
    ScanResult::build(samples, Some(predicted), metadata)
}

pub(crate) fn join(ks: &[u32]) -> String {
    ks.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}
