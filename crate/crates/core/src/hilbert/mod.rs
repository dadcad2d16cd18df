//! Diagonal Hilbert functions `t ↦ dim S_{t,t}/I_{t,t}` and their Hilbert
//! polynomials.
//!
//! Two independent methods compute the function: counting standard
//! monomials of the initial ideal, and the exact rank of the Macaulay-style
//! coefficient matrix of all bidegree-`(t,t)` multiples of the generators.

mod function;
mod linalg;
mod polynomial;

pub use function::{
    bigraded_hilbert_function, diagonal_hilbert_function, hilbert_polynomial, tabulate,
    HilbertFunctionTable, HilbertMethod,
};
pub use linalg::exact_rank;
pub use polynomial::{chi_graph, interpolate_hilbert_polynomial, xi_formula, HilbertPolynomialQ};
