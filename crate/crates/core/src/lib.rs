//! Exact bigraded commutative algebra for certifying flatness of the family of
//! complete quadrics.
//!
//! The crate is organized bottom-up:
//!
//! * [`polyring`]: sparse polynomials over ℚ in two blocks of variables
//!   (`x1..x{n+1}`, `y1..y{n+1}`) plus optional parameter variables.
//! * [`groebner`]: monomial orders, normal forms, Buchberger's algorithm,
//!   monomial ideals and dimension.
//! * [`hilbert`]: diagonal Hilbert functions (initial-ideal count and an
//!   independent exact rank oracle) and Hilbert polynomial interpolation.
//! * [`quadfam`]: the complete-quadrics constructions: determinantal and
//!   graph ideals, Laksov chart matrices, the family ideal `J`, torus
//!   equivariance, primary structure and the flatness certificate.
//! * [`flagcut`]: curves on the plane flag variety `F2 ⊂ P2 × P̌2`.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod flagcut;
pub mod groebner;
pub mod hilbert;
pub mod polyring;
pub mod quadfam;

pub use error::{Error, Result};
pub use groebner::{Ideal, MonomialIdeal, MonomialOrderSpec, OrderKind};
pub use hilbert::{HilbertFunctionTable, HilbertMethod, HilbertPolynomialQ};

pub use polyring::{BiMonomial, BiPolynomial, Rational, Substitution, VariableUniverse};
pub use quadfam::{ChartPoint, SymmetricMatrixQ, TorusElement};

