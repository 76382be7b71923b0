//! The curve `Y^p = f(X)`, its monodromy polynomial and the certificates
//! that lead to the good-reduction change of variables.

pub mod params;
pub mod pipeline;
pub mod steps;

pub use params::{make_params, CoeffSpec, CurveParams, Reduction};
pub use pipeline::{
    attach_root, default_digits, element_t, step_a_certificate, verify_step_i,
    IrreducibilityCertificate, LElem, LField, MElem, MField, Monodromy, SlopeReport,
};
pub use steps::{
    coefficient_bound, compute_step_iii, l_valuation, root_distance_report, verify_step_iv,
    verify_step_v, CongruenceReport, DistanceReport, Slack, StepIIIData,
};
