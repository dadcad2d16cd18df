use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::buchberger::{buchberger, GroebnerBasis};
use super::monomial_ideal::MonomialIdeal;
use super::order::MonomialOrderSpec;
use crate::error::{Error, Result};
use crate::polyring::{BiPolynomial, VariableUniverse};

/// An ideal given by generators, with reduced Gröbner bases cached per
/// monomial order. Each cached basis is computed once and then shared.
pub struct Ideal {
    universe: Arc<VariableUniverse>,
    generators: Vec<BiPolynomial>,
    cache: RwLock<HashMap<MonomialOrderSpec, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Self {
            universe: self.universe.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.generators.iter().map(|g| g.to_string())).finish()
    }
}

impl Ideal {
    pub fn new(universe: &Arc<VariableUniverse>, generators: Vec<BiPolynomial>) -> Result<Self> {
        if generators.iter().any(|g| **g.universe() != **universe) {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self { universe: universe.clone(), generators, cache: RwLock::new(HashMap::new()) })
    }

    pub fn parse(universe: &Arc<VariableUniverse>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| BiPolynomial::parse(universe, s))
            .collect::<Result<_>>()?;
        Self::new(universe, gens)
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.n()
    }

    pub fn generators(&self) -> &[BiPolynomial] {
        &self.generators
    }

    /// The same ideal with generator `k` removed.
    pub fn without_generator(&self, k: usize) -> Result<Self> {
        if k >= self.generators.len() {
            return Err(Error::InvalidInput(format!("no generator {k}")));
        }
        let mut gens = self.generators.clone();
        gens.remove(k);
        Self::new(&self.universe, gens)
    }

    pub fn with_generator(&self, g: BiPolynomial) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(g);
        Self::new(&self.universe, gens)
    }

    /// Errors on the first generator that is not bihomogeneous.
    pub fn check_bihomogeneous(&self) -> Result<()> {
        match self.generators.iter().find(|g| !g.is_bihomogeneous()) {
            Some(g) => Err(Error::NotBihomogeneous(g.to_string())),
            None => Ok(()),
        }
    }

    pub fn groebner(&self, order: &MonomialOrderSpec) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.generators, order)?);
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    pub fn initial_ideal(&self, order: &MonomialOrderSpec) -> Result<MonomialIdeal> {
        let gb = self.groebner(order)?;
        Ok(MonomialIdeal::new(self.universe.nvars(), gb.leading_monomials()))
    }

    pub fn contains(&self, f: &BiPolynomial) -> Result<bool> {
        let gb = self.groebner(&MonomialOrderSpec::lex(self.n()))?;
        Ok(gb.reduce(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner(&MonomialOrderSpec::lex(self.n()))?.is_unit())
    }

    /// Dimension of the subscheme of `Pⁿ × P̌ⁿ`: affine dimension minus two.
    /// Negative when the quotient is supported on the irrelevant locus.
    pub fn projective_dimension(&self) -> Result<i64> {
        Ok(ideal_dimension(self, &MonomialOrderSpec::lex(self.n()))? as i64 - 2)
    }
}

/// Minimal generators of the initial ideal `L(I)`.
pub fn initial_ideal(ideal: &Ideal, order: &MonomialOrderSpec) -> Result<MonomialIdeal> {
    ideal.initial_ideal(order)
}

/// Krull dimension of the quotient ring (over every variable of the
/// universe), read off the initial ideal.
pub fn ideal_dimension(ideal: &Ideal, order: &MonomialOrderSpec) -> Result<usize> {
    ideal.initial_ideal(order)?.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_initial_ideal() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2-x2*y1"]).unwrap();
        assert_eq!(i.initial_ideal(&MonomialOrderSpec::lex(1)).unwrap().render(&u), ["x1*y2"]);
    }

    #[test]
    fn dimension_of_flag_variety_and_of_a_linear_space() {
        let u = VariableUniverse::new(2);
        let f2 = Ideal::parse(&u, &["x1*y1+x2*y2+x3*y3"]).unwrap();
        assert_eq!(ideal_dimension(&f2, &MonomialOrderSpec::lex(2)).unwrap(), 5);
        assert_eq!(f2.projective_dimension().unwrap(), 3);
        let u1 = VariableUniverse::new(1);
        let xs = Ideal::parse(&u1, &["x1", "x2"]).unwrap();
        assert_eq!(ideal_dimension(&xs, &MonomialOrderSpec::lex(1)).unwrap(), 2);
    }

    #[test]
    fn unit_ideal_has_no_dimension() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["1"]).unwrap();
        assert!(matches!(ideal_dimension(&i, &MonomialOrderSpec::lex(1)), Err(Error::UnitIdeal)));
    }

    #[test]
    fn cache_is_reused() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2-x2*y1", "x1*y1+x2*y2"]).unwrap();
        let o = MonomialOrderSpec::grevlex(1);
        let a = i.groebner(&o).unwrap();
        let b = i.groebner(&o).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn not_bihomogeneous() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2", "x1+y1"]).unwrap();
        assert!(matches!(i.check_bihomogeneous(), Err(Error::NotBihomogeneous(g)) if g == "x1+y1"));
    }
}
