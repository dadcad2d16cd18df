//! Monomial orders, normal forms, Buchberger's algorithm, initial ideals and
//! the dimension of monomial quotients.

mod buchberger;
mod ideal;
mod monomial_ideal;
mod order;
mod sorted;

pub use buchberger::{
    buchberger, is_groebner_basis, normal_form, GroebnerBasis, GroebnerCertificate, PairCheck,
    PairOutcome, PairRecord,
};
pub use ideal::{ideal_dimension, initial_ideal, Ideal};
pub use monomial_ideal::MonomialIdeal;
pub use order::{MonomialOrderSpec, OrderKind};
