//! Constructions for the family of graphs of Gauss maps of quadrics over the
//! standard Laksov chart of complete quadrics, and the checks that certify
//! its flatness.

mod certificate;
mod conic;
mod family;
mod ideals;
mod laksov;
mod matrix;
mod primary;
mod torus;

pub use certificate::{
    flatness_certificate, sampled_points, standard_points, Corruption, FiberReport, FlatnessCertificate, Verdict,
};
pub use conic::{conic_adjugate_identity_symbolic, conic_global_equations_check, ConicReport};
pub use family::{chart_coordinates, evaluate_family_at, family_ideal_j, family_ideal_j_in, ChartCoordinates};
pub use ideals::{diagonal_ideal, gauss_graph_ideal, incidence_form, special_fiber_ideal};
pub use laksov::{laksov_diagonal_matrices, LaksovDiagonal};
pub use matrix::{random_rational, ChartPoint, SymmetricMatrixQ, TorusElement};
pub use primary::{
    nonzerodivisor_check, primary_components, primary_intersection_check, NonzerodivisorReport, PrimaryReport,
};
pub use torus::{
    closed_orbit_limit_check, torus_action_check, torus_action_symbolic, OrbitLimitReport, TorusReport, TorusScalar,
};
