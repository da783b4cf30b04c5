//! Special functions and one-dimensional oscillatory integrals.

mod bessel;
mod dd;
mod oscillatory;
pub mod quadrature;

pub use bessel::{bessel_j0, bessel_j1, j0_extrema, j0_zeros, ExtremaTable, DELTA_ENV, SERIES_CROSSOVER};
pub use oscillatory::{
    cosine_weight_kernel, euler_sum, fresnel_constant, hankel_decay_transform, ChiForm, OscIntSpec,
};
