use num_rational::BigRational;
use num_traits::One;

use super::predicted::{predicted_exponent, PredictKind};
use crate::analysis::quadrature::compensated_sum;
use crate::error::{Error, Result};
use crate::exponents::ExtScalar;

/// Weight of the constant-density computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantKind {
    Separable { alpha: ExtScalar, beta: ExtScalar, q: ExtScalar },
    Radial { gamma: ExtScalar, q: ExtScalar },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVerdict {
    Divergent,
    Convergent,
}

impl SeriesVerdict {
    pub fn name(self) -> &'static str {
        match self {
            SeriesVerdict::Divergent => "divergent",
            SeriesVerdict::Convergent => "convergent",
        }
    }
}

/// Partial sums of `sum_j j^s` bounding the weighted norm of `2 pi J0`
/// from below, with the exact divergence verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantSums {
    pub exponent: BigRational,
    pub verdict: SeriesVerdict,
    /// `(N, S_N)` for each requested `N`.
    pub partial: Vec<(u64, f64)>,
}

/// The series diverges exactly when `s >= -1`.
pub fn constant_density_sums(kind: &ConstantKind, n_list: &[u64]) -> Result<ConstantSums> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("partial-sum indices must be strictly increasing"));
    }
    let predict = match kind {
        ConstantKind::Separable { alpha, beta, q } => PredictKind::Constant { weight_sum: alpha + beta, q: q.clone() },
        ConstantKind::Radial { gamma, q } => PredictKind::Constant { weight_sum: gamma.clone(), q: q.clone() },
    };
    let exponent = predicted_exponent(&predict)?.slope;
    let verdict = if exponent >= -BigRational::one() {
        SeriesVerdict::Divergent
    } else {
        SeriesVerdict::Convergent
    };
    let s = num_traits::ToPrimitive::to_f64(&exponent).unwrap_or(f64::NAN);
    let mut partial = Vec::with_capacity(n_list.len());
    let mut terms = Vec::new();
    for &n in n_list {
        terms.extend((terms.len() as u64 + 1..=n).map(|j| (j as f64).powf(s)));
        partial.push((n, compensated_sum(terms.iter().copied())));
    }
    Ok(ConstantSums { exponent, verdict, partial })
}
