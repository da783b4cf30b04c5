use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::classify::{classify_radial, classify_separable, RadialParams, SeparableParams, Verdict};
use super::scalar::ExtScalar;
use crate::error::{Error, Result};

/// Weight family and its fixed exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Separable { alpha: ExtScalar, beta: ExtScalar },
    Radial { gamma: ExtScalar },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramRow {
    pub inv_r: ExtScalar,
    pub inv_q: ExtScalar,
    pub verdict: Verdict,
}

/// A classified `(1/r, 1/q)` lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RieszDiagram {
    pub kind: DiagramKind,
    pub grid_n: u32,
    pub rows: Vec<DiagramRow>,
}

impl RieszDiagram {
    pub fn lookup(&self, inv_r: &ExtScalar, inv_q: &ExtScalar) -> Option<&Verdict> {
        self.rows
            .iter()
            .find(|row| &row.inv_r == inv_r && &row.inv_q == inv_q)
            .map(|row| &row.verdict)
    }

    /// Metadata lines for the CSV artifact.
    pub fn metadata(&self) -> BTreeMap<String, String> {
        let mut meta = BTreeMap::new();
        match &self.kind {
            DiagramKind::Separable { alpha, beta } => {
                meta.insert("kind".into(), "separable".into());
                meta.insert("alpha".into(), alpha.to_string());
                meta.insert("beta".into(), beta.to_string());
            }
            DiagramKind::Radial { gamma } => {
                meta.insert("kind".into(), "radial".into());
                meta.insert("gamma".into(), gamma.to_string());
            }
        }
        meta.insert("grid_n".into(), self.grid_n.to_string());
        meta.insert(
            "lattice".into(),
            format!("inv_r=i/{n},i=0..{n};inv_q=j/{m},j=1..{m}", n = self.grid_n, m = 2 * self.grid_n),
        );
        meta
    }
}

/// Classifies the lattice `1/r = i/n` (`i = 0..=n`) by `1/q = j/(2n)`
/// (`j = 1..=2n`), rows ordered by `1/q` then `1/r`.
///
/// The `1/q` axis is sampled twice as finely as `1/r`: the interesting
/// structure of both diagrams sits at `1/q <= 1/4`.
pub fn riesz_diagram(kind: DiagramKind, grid_n: u32) -> Result<RieszDiagram> {
    if grid_n < 2 {
        return Err(Error::domain(format!("grid_n must be at least 2, got {grid_n}")));
    }
    let n = BigInt::from(grid_n);
    let m = BigInt::from(2 * grid_n);
    let mut rows = Vec::with_capacity(((grid_n + 1) * 2 * grid_n) as usize);
    for j in 1..=2 * grid_n {
        let inv_q = ExtScalar::Finite(BigRational::new(BigInt::from(j), m.clone()));
        for i in 0..=grid_n {
            let inv_r = ExtScalar::Finite(BigRational::new(BigInt::from(i), n.clone()));
            let r = inv_r.recip();
            let q = inv_q.recip();
            let verdict = match &kind {
                DiagramKind::Separable { alpha, beta } => classify_separable(
                    &SeparableParams::new(alpha.clone(), beta.clone(), r, q)?,
                )?,
                DiagramKind::Radial { gamma } => {
                    classify_radial(&RadialParams::new(gamma.clone(), r, q)?)?
                }
            };
            rows.push(DiagramRow {
                inv_r,
                inv_q: inv_q.clone(),
                verdict,
            });
        }
    }
    Ok(RieszDiagram { kind, grid_n, rows })
}
