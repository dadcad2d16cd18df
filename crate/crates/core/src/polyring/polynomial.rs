use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::monomial::BiMonomial;
use super::rational::Rational;
use super::text;
use super::universe::VariableUniverse;
use crate::error::{Error, Result};

/// A sparse polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by monomial; zero coefficients are never
/// stored, so the zero polynomial is the empty map.
#[derive(Clone)]
pub struct BiPolynomial {
    universe: Arc<VariableUniverse>,
    terms: BTreeMap<BiMonomial, Rational>,
}

impl PartialEq for BiPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for BiPolynomial {}

pub(crate) fn same_universe(a: &Arc<VariableUniverse>, b: &Arc<VariableUniverse>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl BiPolynomial {
    pub fn zero(universe: &Arc<VariableUniverse>) -> Self {
        Self { universe: universe.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(universe: &Arc<VariableUniverse>, c: Rational) -> Self {
        let mut p = Self::zero(universe);
        p.add_term(BiMonomial::one(universe.nvars()), c);
        p
    }

    pub fn one(universe: &Arc<VariableUniverse>) -> Self {
        Self::constant(universe, Rational::one())
    }

    pub fn var(universe: &Arc<VariableUniverse>, idx: usize) -> Self {
        Self::monomial(universe, BiMonomial::var(universe.nvars(), idx), Rational::one())
    }

    pub fn var_named(universe: &Arc<VariableUniverse>, name: &str) -> Result<Self> {
        Ok(Self::var(universe, universe.index_of(name)?))
    }

    pub fn monomial(universe: &Arc<VariableUniverse>, m: BiMonomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), universe.nvars());
        let mut p = Self::zero(universe);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(universe: &Arc<VariableUniverse>, terms: I) -> Self
    where
        I: IntoIterator<Item = (BiMonomial, Rational)>,
    {
        let mut p = Self::zero(universe);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(universe: &Arc<VariableUniverse>, src: &str) -> Result<Self> {
        text::parse(universe, src)
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing default (lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BiMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &BiMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: BiMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        Self {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &BiMonomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        Self {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.universe);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Bidegree when the polynomial is bihomogeneous (parameters ignored);
    /// `None` for the zero polynomial or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let n = self.universe.n();
        let mut it = self.terms.keys().map(|m| m.bidegree(n));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The zero polynomial counts as bihomogeneous.
    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    pub fn is_param_free(&self) -> bool {
        let n = self.universe.n();
        self.terms.keys().all(|m| m.is_param_free(n))
    }

    /// Re-homes the polynomial in a universe that has the same variable
    /// names for every variable actually used.
    pub fn to_universe(&self, target: &Arc<VariableUniverse>) -> Result<Self> {
        if same_universe(&self.universe, target) {
            return Ok(Self { universe: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> = (0..self.universe.nvars())
            .map(|i| target.index_of(self.universe.name(i)).ok())
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.nvars()];
            for i in m.support() {
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.universe.name(i).into()))?;
                exps[j] = m.exponent(i);
            }
            out.add_term(BiMonomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Value at a point given for every variable of the universe.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.universe.nvars() {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, universe has {} variables",
                point.len(),
                self.universe.nvars()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in m.support() {
                v *= num_traits::pow(point[i].clone(), m.exponent(i) as usize);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Leading term under the default lex order.
    pub fn lex_leading_term(&self) -> Option<(&BiMonomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl fmt::Debug for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPolynomial({})", text::render(self))
    }
}

// Operator impls panic on a universe mismatch; use the `try_*` methods for
// inputs that may come from different universes.
impl Add for &BiPolynomial {
    type Output = BiPolynomial;
    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        self.try_add(rhs).expect("universe mismatch in +")
    }
}

impl Sub for &BiPolynomial {
    type Output = BiPolynomial;
    fn sub(self, rhs: &BiPolynomial) -> BiPolynomial {
        self.try_sub(rhs).expect("universe mismatch in -")
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;
    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        self.try_mul(rhs).expect("universe mismatch in *")
    }
}

impl Neg for &BiPolynomial {
    type Output = BiPolynomial;
    fn neg(self) -> BiPolynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::q;

    fn p(u: &Arc<VariableUniverse>, s: &str) -> BiPolynomial {
        BiPolynomial::parse(u, s).unwrap()
    }

    #[test]
    fn cancellation() {
        let u = VariableUniverse::new(1);
        let f = p(&u, "x1*y2-x2*y1");
        let g = p(&u, "x2*y1");
        assert_eq!(&f + &g, p(&u, "x1*y2"));
    }

    #[test]
    fn zero_factor() {
        let u = VariableUniverse::new(1);
        let f = p(&u, "x1+x2");
        let g = &p(&u, "y1") - &p(&u, "y1");
        assert!(g.is_zero());
        assert!((&f * &g).is_zero());
    }

    #[test]
    fn square_of_trace_form() {
        let u = VariableUniverse::new(1);
        let f = p(&u, "x1*y1+x2*y2");
        // distribute-and-collect by hand: (a+b)^2 = a^2 + 2ab + b^2
        let a = p(&u, "x1*y1");
        let b = p(&u, "x2*y2");
        let oracle = &(&(&a * &a) + &(&a * &b).scale(&q(2))) + &(&b * &b);
        assert_eq!(f.pow(2), oracle);
        assert_eq!(f.pow(2).to_string(), "x1^2*y1^2+2*x1*x2*y1*y2+x2^2*y2^2");
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = BiPolynomial::var(&VariableUniverse::new(1), 0);
        let b = BiPolynomial::var(&VariableUniverse::new(2), 0);
        assert!(matches!(a.try_add(&b), Err(Error::UniverseMismatch)));
        assert!(matches!(a.try_mul(&b), Err(Error::UniverseMismatch)));
    }

    #[test]
    fn bidegree_ignores_parameters() {
        let u = VariableUniverse::chart(1);
        let f = p(&u, "x1*y2-d1*x2*y1");
        assert_eq!(f.bidegree(), Some((1, 1)));
        assert!(!f.is_param_free());
        assert!(!p(&u, "x1+y1").is_bihomogeneous());
        assert!(BiPolynomial::zero(&u).is_bihomogeneous());
    }

    #[test]
    fn to_universe_by_name() {
        let u = VariableUniverse::chart(1);
        let f = p(&u, "x1*y2+3*x2*y2");
        let v = VariableUniverse::new(1);
        assert_eq!(f.to_universe(&v).unwrap(), p(&v, "x1*y2+3*x2*y2"));
        assert!(p(&u, "d1*x1").to_universe(&v).is_err());
    }
}
