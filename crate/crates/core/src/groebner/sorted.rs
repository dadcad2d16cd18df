//! Order-sorted term vectors used inside the Gröbner kernel. Terms are kept
//! in increasing order so the leading term is the last element.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::order::MonomialOrderSpec;
use crate::polyring::{BiMonomial, BiPolynomial, Rational, VariableUniverse};

#[derive(Debug, Clone)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(BiMonomial, Rational)>,
}

impl SortedPoly {
    pub fn from_poly(p: &BiPolynomial, order: &MonomialOrderSpec) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Self { terms }
    }

    pub fn to_poly(&self, universe: &Arc<VariableUniverse>) -> BiPolynomial {
        BiPolynomial::from_terms(universe, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &BiMonomial {
        &self.terms.last().expect("nonzero").0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero").1
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// Tail (all but the leading term) multiplied by `shift` and `factor`.
    fn shifted_tail(&self, shift: &BiMonomial, factor: &Rational) -> Vec<(BiMonomial, Rational)> {
        let k = self.terms.len() - 1;
        self.terms[..k].iter().map(|(m, c)| (m.mul(shift), c * factor)).collect()
    }
}

/// Merges two increasing term lists, summing like terms.
pub(crate) fn merge(
    a: Vec<(BiMonomial, Rational)>,
    b: Vec<(BiMonomial, Rational)>,
    order: &MonomialOrderSpec,
) -> Vec<(BiMonomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (m, c) = ia.next().unwrap();
                let (_, d) = ib.next().unwrap();
                let s = c + d;
                if !s.is_zero() {
                    out.push((m, s));
                }
            }
        }
    }
    out
}

/// S-polynomial `lcm/lm(f)·f/lc(f) − lcm/lm(g)·g/lc(g)`.
pub(crate) fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: &MonomialOrderSpec) -> SortedPoly {
    let lcm = f.lm().lcm(g.lm());
    let sf = f.lm().quotient_of(&lcm).expect("lm divides lcm");
    let sg = g.lm().quotient_of(&lcm).expect("lm divides lcm");
    let a = f.shifted_tail(&sf, &f.lc().recip());
    let b = g.shifted_tail(&sg, &-g.lc().recip());
    SortedPoly { terms: merge(a, b, order) }
}

/// Full reduction of `f` by `basis`: repeatedly takes the largest term; if
/// some leading monomial divides it (first match in basis order wins) it is
/// cancelled, otherwise it moves to the remainder. Returns the remainder and
/// the number of reduction steps.
pub(crate) fn reduce(f: &SortedPoly, basis: &[SortedPoly], order: &MonomialOrderSpec) -> (SortedPoly, usize) {
    let mut work = f.terms.clone();
    let mut rem_desc: Vec<(BiMonomial, Rational)> = Vec::new();
    let mut steps = 0;
    while let Some((m, c)) = work.pop() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let shift = g.lm().quotient_of(&m).expect("divides");
                let factor = -(&c / g.lc());
                let tail = g.shifted_tail(&shift, &factor);
                work = merge(work, tail, order);
                steps += 1;
            }
            None => rem_desc.push((m, c)),
        }
    }
    rem_desc.reverse();
    (SortedPoly { terms: rem_desc }, steps)
}
