use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::hilbert::{bigraded_hilbert_function, HilbertMethod};
use crate::polyring::{BiMonomial, BiPolynomial, Rational, VariableUniverse};

#[derive(Debug, Clone, Serialize)]
pub struct PrimaryReport {
    pub n: usize,
    pub ideal: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub intersection: Vec<String>,
    /// The listed components are exactly the minimal primes found by the
    /// vertex-cover search.
    pub components_are_minimal_primes: bool,
    pub holds: bool,
}

fn leading_monomial_ideal(n: usize) -> MonomialIdeal {
    let u = VariableUniverse::new(n);
    let nv = u.nvars();
    let gens = (0..=n).flat_map(|i| {
        let u = u.clone();
        (i + 1..=n).map(move |j| BiMonomial::var(nv, u.x(i)).mul(&BiMonomial::var(nv, u.y(j))))
    });
    MonomialIdeal::new(nv, gens)
}

/// The primes `<x1, ..., x_i, y_{i+2}, ..., y_{n+1}>` for `i = 0..=n`, as
/// variable index sets.
pub fn primary_components(n: usize) -> Vec<Vec<usize>> {
    let u = VariableUniverse::new(n);
    (0..=n)
        .map(|i| {
            let mut vars: Vec<usize> = (0..i).map(|k| u.x(k)).collect();
            vars.extend((i + 1..=n).map(|k| u.y(k)));
            vars
        })
        .collect()
}

/// `<x_i y_j : i < j>` equals the intersection of [`primary_components`].
pub fn primary_intersection_check(n: usize) -> PrimaryReport {
    let u = VariableUniverse::new(n);
    let nv = u.nvars();
    let m = leading_monomial_ideal(n);
    let comps = primary_components(n);
    let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| MonomialIdeal::generated_by_vars(nv, c)).collect();
    let inter = ideals[1..].iter().fold(ideals[0].clone(), |acc, p| acc.intersect(p));

    let mut found = m.minimal_primes();
    found.sort();
    let mut listed = comps.clone();
    listed.sort();

    PrimaryReport {
        n,
        ideal: m.render(&u),
        components: ideals.iter().map(|p| p.render(&u)).collect(),
        intersection: inter.render(&u),
        components_are_minimal_primes: found == listed,
        holds: inter == m,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NonzerodivisorReport {
    /// `None` when the monomial ideal is not squarefree, so its associated
    /// primes are not read off from the minimal ones.
    pub prime_avoidance: Option<bool>,
    pub hf_identity: bool,
    pub hf_rows: Vec<(u32, u64, u64)>,
    pub is_nonzerodivisor: bool,
}

/// Whether `f` is a nonzerodivisor modulo the monomial ideal generated by
/// `monomials`. For squarefree ideals this is decided by prime avoidance and
/// cross-checked against `HF_{M+f}(t,t) = HF_M(t,t) - HF_M(t-a,t-b)` for
/// `t <= 5`, `(a, b)` the bidegree of `f`; otherwise only the identity is
/// available.
pub fn nonzerodivisor_check(f: &BiPolynomial, monomials: &[BiMonomial]) -> Result<NonzerodivisorReport> {
    let universe = f.universe().clone();
    let (a, b) = f
        .bidegree()
        .ok_or_else(|| Error::NotBihomogeneous(f.to_string()))?;
    if !f.is_param_free() {
        return Err(Error::ParametersPresent(f.to_string()));
    }
    let nv = universe.nvars();
    if monomials.iter().any(|m| m.nvars() != nv) {
        return Err(Error::UniverseMismatch);
    }
    let m = MonomialIdeal::new(nv, monomials.iter().cloned());

    let prime_avoidance = m.is_squarefree().then(|| {
        m.minimal_primes().iter().all(|prime| {
            f.terms().any(|(mono, _)| prime.iter().all(|&v| mono.exponent(v) == 0))
        })
    });

    let m_polys: Vec<BiPolynomial> =
        m.gens().iter().map(|g| BiPolynomial::monomial(&universe, g.clone(), Rational::from_integer(1.into()))).collect();
    let m_ideal = Ideal::new(&universe, m_polys)?;
    let mf_ideal = m_ideal.with_generator(f.clone())?;
    let method = HilbertMethod::InitialIdealCount;
    let mut hf_rows = Vec::new();
    let mut hf_identity = true;
    for t in 0..=5u32 {
        let base = bigraded_hilbert_function(&m_ideal, t, t, method)?;
        let shifted = if t >= a && t >= b { bigraded_hilbert_function(&m_ideal, t - a, t - b, method)? } else { 0 };
        let with_f = bigraded_hilbert_function(&mf_ideal, t, t, method)?;
        hf_identity &= base.checked_sub(shifted) == Some(with_f);
        hf_rows.push((t, with_f, base.saturating_sub(shifted)));
    }
    Ok(NonzerodivisorReport {
        prime_avoidance,
        hf_identity,
        hf_rows,
        is_nonzerodivisor: prime_avoidance.unwrap_or(hf_identity),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfam::ideals::incidence_form;

    #[test]
    fn decomposition_up_to_four() {
        for n in 1..=4 {
            let r = primary_intersection_check(n);
            assert!(r.holds && r.components_are_minimal_primes, "{r:?}");
            assert_eq!(r.components.len(), n + 1);
        }
        let r = primary_intersection_check(2);
        assert_eq!(r.components, vec![vec!["y2", "y3"], vec!["x1", "y3"], vec!["x1", "x2"]]);
    }

    #[test]
    fn incidence_form_is_regular() {
        for n in 1..=3 {
            let u = VariableUniverse::new(n);
            let m = leading_monomial_ideal(n);
            let r = nonzerodivisor_check(&incidence_form(&u), m.gens()).unwrap();
            assert_eq!(r.prime_avoidance, Some(true));
            assert!(r.hf_identity && r.is_nonzerodivisor);
        }
    }

    #[test]
    fn member_is_a_zero_divisor() {
        let u = VariableUniverse::new(2);
        let m = leading_monomial_ideal(2);
        let f = BiPolynomial::parse(&u, "x1*y2").unwrap();
        let r = nonzerodivisor_check(&f, m.gens()).unwrap();
        assert_eq!(r.prime_avoidance, Some(false));
        assert!(!r.hf_identity && !r.is_nonzerodivisor);
    }

    #[test]
    fn small_case() {
        let u = VariableUniverse::new(1);
        let m = BiPolynomial::parse(&u, "x1*y2").unwrap();
        let gens: Vec<BiMonomial> = m.terms().map(|(m, _)| m.clone()).collect();
        // x1*y1 lies in the component <x1>: y2 * x1*y1 is in M while y2 is not
        let f = BiPolynomial::parse(&u, "x1*y1").unwrap();
        let r = nonzerodivisor_check(&f, &gens).unwrap();
        assert!(!r.is_nonzerodivisor && !r.hf_identity);
        let f = BiPolynomial::parse(&u, "x1*y1+x2*y2").unwrap();
        let r = nonzerodivisor_check(&f, &gens).unwrap();
        assert!(r.is_nonzerodivisor && r.hf_identity);
    }
}
