use std::collections::HashMap;
use std::sync::Arc;



use super::monomial::BiMonomial;
use super::polynomial::{same_universe, BiPolynomial};
use super::rational::Rational;
use super::universe::VariableUniverse;
use crate::error::{Error, Result};

/// What a substituted variable is replaced by.
#[derive(Debug, Clone)]
pub enum Replacement {
    Rational(Rational),
    /// A polynomial living in the substitution's target universe.
    Poly(BiPolynomial),
}

/// A ring homomorphism from `source` to `target` given by images of some
/// variables; every other variable maps to the same-named variable of
/// `target`.
#[derive(Debug, Clone)]
pub struct Substitution {
    source: Arc<VariableUniverse>,
    target: Arc<VariableUniverse>,
    images: Vec<Option<Replacement>>,
}

impl Substitution {
    pub fn new(source: &Arc<VariableUniverse>, target: &Arc<VariableUniverse>) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.nvars()],
        }
    }

    /// Specializes parameters to rationals; the target universe drops
    /// exactly those parameters.
    pub fn specialize(source: &Arc<VariableUniverse>, values: &[(&str, Rational)]) -> Result<Self> {
        let names: Vec<&str> = values.iter().map(|(n, _)| *n).collect();
        let target = source.drop_params(&names)?;
        let mut s = Self::new(source, &target);
        for (name, v) in values {
            s.set_rational(name, v.clone())?;
        }
        Ok(s)
    }

    pub fn target(&self) -> &Arc<VariableUniverse> {
        &self.target
    }

    pub fn set_rational(&mut self, name: &str, value: Rational) -> Result<&mut Self> {
        let idx = self.source.index_of(name)?;
        self.images[idx] = Some(Replacement::Rational(value));
        Ok(self)
    }

    pub fn set_poly(&mut self, name: &str, value: BiPolynomial) -> Result<&mut Self> {
        let idx = self.source.index_of(name)?;
        if !same_universe(value.universe(), &self.target) {
            return Err(Error::UniverseMismatch);
        }
        self.images[idx] = Some(Replacement::Poly(value));
        Ok(self)
    }

    /// Applies the substitution. Fails if a kept variable has no
    /// same-named counterpart in the target.
    pub fn apply(&self, f: &BiPolynomial) -> Result<BiPolynomial> {
        if !same_universe(f.universe(), &self.source) {
            return Err(Error::UniverseMismatch);
        }
        let kept: Vec<Option<usize>> = (0..self.source.nvars())
            .map(|i| match self.images[i] {
                Some(_) => Ok(None),
                None => self.target.index_of(self.source.name(i)).map(Some),
            })
            .collect::<Result<_>>()?;

        let mut powers: HashMap<(usize, u32), BiPolynomial> = HashMap::new();
        let mut out = BiPolynomial::zero(&self.target);
        for (m, c) in f.terms() {
            let mut exps = vec![0u32; self.target.nvars()];
            let mut coeff = c.clone();
            let mut factors: Vec<(usize, u32)> = Vec::new();
            for i in m.support() {
                let e = m.exponent(i);
                match (&self.images[i], kept[i]) {
                    (None, Some(j)) => exps[j] += e,
                    (Some(Replacement::Rational(v)), _) => coeff *= num_traits::pow(v.clone(), e as usize),
                    (Some(Replacement::Poly(_)), _) => factors.push((i, e)),
                    (None, None) => unreachable!(),
                }
            }
            let mut term = BiPolynomial::monomial(&self.target, BiMonomial::from_exponents(exps), coeff);
            for (i, e) in factors {
                let pw = powers.entry((i, e)).or_insert_with(|| match &self.images[i] {
                    Some(Replacement::Poly(p)) => p.pow(e),
                    _ => unreachable!(),
                });
                term = &term * pw;
            }
            for (tm, tc) in term.terms() {
                out.add_term(tm.clone(), tc.clone());
            }
        }
        Ok(out)
    }

    /// Like [`apply`](Self::apply), also reporting whether the image is
    /// bihomogeneous.
    pub fn apply_flagged(&self, f: &BiPolynomial) -> Result<(BiPolynomial, bool)> {
        let out = self.apply(f)?;
        let flag = out.is_bihomogeneous();
        Ok((out, flag))
    }
}

impl BiPolynomial {
    /// Evaluates every parameter at a rational value, landing in the plain
    /// x/y universe of the same `n`.
    pub fn specialize_params(&self, values: &[(&str, Rational)]) -> Result<BiPolynomial> {
        Substitution::specialize(self.universe(), values)?.apply(self)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::q;

    #[test]
    fn specialize_chart_at_identity_and_zero() {
        let u = VariableUniverse::chart(1);
        // x'1 y'2 - d1 y'1 x'2 with u = I (x' = x, y' = y)
        let f = BiPolynomial::parse(&u, "x1*y2-d1*y1*x2").unwrap();
        let s = Substitution::specialize(&u, &[("d1", q(0)), ("u2_1", q(0))]).unwrap();
        let g = s.apply(&f).unwrap();
        assert_eq!(g.universe().num_params(), 0);
        assert_eq!(g.to_string(), "x1*y2");
    }

    #[test]
    fn empty_assignment_is_identity() {
        let u = VariableUniverse::new(1);
        let f = BiPolynomial::parse(&u, "x1*y2").unwrap();
        assert_eq!(Substitution::new(&u, &u).apply(&f).unwrap(), f);
    }

    #[test]
    fn evaluate_linear_form() {
        let u = VariableUniverse::chart(1);
        // x'1 = x1 + u21 x2 at u21 = 3
        let f = BiPolynomial::parse(&u, "x1+u2_1*x2").unwrap();
        let g = f.specialize_params(&[("u2_1", q(3)), ("d1", q(5))]).unwrap();
        assert_eq!(g.to_string(), "x1+3*x2");
    }

    #[test]
    fn polynomial_images_and_flag() {
        let u = VariableUniverse::new(1);
        let f = BiPolynomial::parse(&u, "x1*y1").unwrap();
        let mut s = Substitution::new(&u, &u);
        s.set_poly("x1", BiPolynomial::parse(&u, "x1+x2").unwrap()).unwrap();
        let (g, homog) = s.apply_flagged(&f).unwrap();
        assert_eq!(g.to_string(), "x1*y1+x2*y1");
        assert!(homog);
        s.set_poly("y1", BiPolynomial::parse(&u, "y1+x1").unwrap()).unwrap();
        let (_, homog) = s.apply_flagged(&f).unwrap();
        assert!(!homog);
    }

    #[test]
    fn unknown_variable() {
        let u = VariableUniverse::new(1);
        let mut s = Substitution::new(&u, &u);
        assert!(matches!(s.set_rational("d7", q(1)), Err(Error::UnknownVariable(_))));
        assert!(Substitution::specialize(&u, &[("d1", q(1))]).is_err());
    }
}
