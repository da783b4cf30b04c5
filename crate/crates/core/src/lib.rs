//! Verification laboratory for weighted Fourier extension estimates on the
//! unit circle.
//!
//! The crate has two halves. The exact half ([`exponents`], [`feasibility`])
//! decides boundedness regions of the weighted extension operators
//! `L^r(S^1) -> L^q(R^2)` in rational arithmetic and constructs
//! interpolation-exponent certificates. The numerical half ([`analysis`],
//! [`operator`], [`norms`], [`experiments`]) evaluates the extension operator
//! on the standard test densities and reproduces the scaling laws behind
//! every sharpness counterexample.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod exponents;
pub mod feasibility;
pub mod norms;
pub mod operator;

pub use error::{Error, Result};
pub use exponents::{ExtScalar, RadialParams, SeparableParams, Verdict};
