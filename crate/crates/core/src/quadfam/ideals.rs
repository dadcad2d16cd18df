use std::sync::Arc;

use num_traits::One;

use super::matrix::SymmetricMatrixQ;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{BiMonomial, BiPolynomial, Rational, VariableUniverse};

fn xy_term(universe: &Arc<VariableUniverse>, i: usize, j: usize, c: Rational) -> (BiMonomial, Rational) {
    let nv = universe.nvars();
    (BiMonomial::var(nv, universe.x(i)).mul(&BiMonomial::var(nv, universe.y(j))), c)
}

/// `x1*y1 + ... + x{n+1}*y{n+1}`.
pub fn incidence_form(universe: &Arc<VariableUniverse>) -> BiPolynomial {
    BiPolynomial::from_terms(universe, (0..=universe.n()).map(|i| xy_term(universe, i, i, Rational::one())))
}

/// The ideal of the diagonal: all 2x2 minors `x_i y_j - x_j y_i`, `i < j`.
pub fn diagonal_ideal(n: usize) -> Ideal {
    let universe = VariableUniverse::new(n);
    let mut gens = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            gens.push(BiPolynomial::from_terms(
                &universe,
                [xy_term(&universe, i, j, Rational::one()), xy_term(&universe, j, i, -Rational::one())],
            ));
        }
    }
    Ideal::new(&universe, gens).expect("generators share the universe")
}

/// The fiber over `(I, 0)`: the monomials `x_i y_j` for `i < j`, followed by
/// the incidence form.
pub fn special_fiber_ideal(n: usize) -> Ideal {
    let universe = VariableUniverse::new(n);
    let mut gens = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            gens.push(BiPolynomial::from_terms(&universe, [xy_term(&universe, i, j, Rational::one())]));
        }
    }
    gens.push(incidence_form(&universe));
    Ideal::new(&universe, gens).expect("generators share the universe")
}

/// The graph of the Gauss map of the quadric `x A x^T = 0`: the incidence
/// form followed by the minors `y_i (xA)_j - y_j (xA)_i`, `i < j`.
pub fn gauss_graph_ideal(a: &SymmetricMatrixQ) -> Result<Ideal> {
    if !a.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let n = a.n();
    let universe = VariableUniverse::new(n);
    let xa = |j: usize| -> Vec<(usize, Rational)> {
        (0..=n).map(|k| (k, a.get(k, j).clone())).filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect()
    };
    let mut gens = vec![incidence_form(&universe)];
    for i in 0..=n {
        for j in i + 1..=n {
            let mut terms = Vec::new();
            for (k, c) in xa(j) {
                terms.push(xy_term(&universe, k, i, c));
            }
            for (k, c) in xa(i) {
                terms.push(xy_term(&universe, k, j, -c));
            }
            gens.push(BiPolynomial::from_terms(&universe, terms));
        }
    }
    Ideal::new(&universe, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::MonomialOrderSpec;

    #[test]
    fn generator_shapes() {
        let d = diagonal_ideal(2);
        let rendered: Vec<String> = d.generators().iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["x1*y2-x2*y1", "x1*y3-x3*y1", "x2*y3-x3*y2"]);
        let s = special_fiber_ideal(1);
        let rendered: Vec<String> = s.generators().iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["x1*y2", "x1*y1+x2*y2"]);
    }

    #[test]
    fn gauss_graph_of_identity_is_diagonal_plus_incidence() {
        let g = gauss_graph_ideal(&SymmetricMatrixQ::identity(2)).unwrap();
        let d = diagonal_ideal(2);
        for f in d.generators() {
            let f = f.clone();
            assert!(g.contains(&f).unwrap());
        }
        assert_eq!(g.generators().len(), 4);
        assert!(g.projective_dimension().unwrap() == 1);
    }

    #[test]
    fn degenerate_quadric_is_rejected() {
        let a = SymmetricMatrixQ::from_integers(&[&[1, 0], &[0, 0]]).unwrap();
        assert!(matches!(gauss_graph_ideal(&a), Err(Error::Degenerate)));
    }

    #[test]
    fn special_fiber_dimension() {
        for n in 1..=3 {
            let s = special_fiber_ideal(n);
            let dim = s.initial_ideal(&MonomialOrderSpec::lex(n)).unwrap().dimension().unwrap();
            assert_eq!(dim as i64 - 2, n as i64 - 1);
        }
    }
}
