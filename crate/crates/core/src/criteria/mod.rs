//! Tangent-space criteria for excluding ideals from the component of
//! reduced point configurations, and the classification of products.

mod classify;
mod degree_set;
mod hom;
mod tangent;

pub use classify::{classify_pn, classify_products, Classification};
pub use degree_set::DegreeSet;
pub use hom::{ext1_dim_degree_zero, hom_dim_degree_zero};
pub use tangent::{
    in_c, slip_dim, sufficiency_witness_check, tangent_criterion_custom, tangent_criterion_factor, truncation_ideal,
    CertificateGrade, CriterionReport, Sufficiency, SufficiencyStatus, Verdict, Witness, WitnessCheck, WitnessFamily,
};
