//! Sparse multivariate polynomials over ℚ with an x/y bigrading.
//!
//! Every polynomial lives in a [`VariableUniverse`]: the point coordinates
//! `x1..x{n+1}`, the dual coordinates `y1..y{n+1}`, and an ordered list of
//! parameter variables (chart coordinates `d_i`, `u{i}_{j}`, torus
//! coordinates `c_i`, or anything else) which carry bidegree `(0, 0)`.

mod monomial;
mod polynomial;
pub(crate) mod rational;
mod substitute;
mod text;
mod universe;

pub use monomial::{monomials_of_bidegree, BiMonomial};
pub use polynomial::BiPolynomial;
pub use rational::{format_rational, parse_rational, Rational};
pub use substitute::{Replacement, Substitution};
pub use universe::VariableUniverse;
