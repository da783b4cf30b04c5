//! Exact exponent arithmetic and the boundedness-region classifiers.

mod classify;
mod diagram;
mod scalar;

pub use classify::{
    classify_radial, classify_separable, classify_unweighted, conjugate_exponent,
    radial_threshold, CaseTag, Decision, RadialParams, SeparableParams, Verdict, Violation,
};
pub use diagram::{riesz_diagram, DiagramKind, DiagramRow, RieszDiagram};
pub use scalar::ExtScalar;

pub(crate) use scalar::{rat, rmax, rmin};
