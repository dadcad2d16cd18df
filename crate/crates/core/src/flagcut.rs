//! Curves in the plane flag variety.
//!
//! `F2 ⊂ P² × P̌²` is the incidence correspondence `x · y = 0`. For a plane
//! curve `f0` of degree `d0` and a curve `f1` of degree `d1` in the dual
//! plane, `Γ = (f0 × f1) ∩ F2` is a curve, and its diagonal Hilbert
//! polynomial is compared against the closed formula [`xi_formula`] and
//! against the Euler characteristic of the Koszul complex on
//! `f0, f1, x · y`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{interpolate_hilbert_polynomial, tabulate, xi_formula, HilbertMethod, HilbertPolynomialQ};
use crate::polyring::{monomials_of_bidegree, BiPolynomial, Rational, Substitution, VariableUniverse};
use crate::quadfam::incidence_form;

const MAX_ATTEMPTS: usize = 25;

/// A curve `f0(x)` in the plane and a curve `f1(y)` in the dual plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurvePair {
    f0: BiPolynomial,
    f1: BiPolynomial,
    d0: u32,
    d1: u32,
}

impl PlaneCurvePair {
    pub fn new(f0: BiPolynomial, f1: BiPolynomial) -> Result<Self> {
        for f in [&f0, &f1] {
            if f.universe().n() != 2 || f.universe().num_params() != 0 {
                return Err(Error::InvalidInput("curves live in the n = 2 ring without parameters".into()));
            }
        }
        if f0.universe() != f1.universe() {
            return Err(Error::UniverseMismatch);
        }
        let bideg = |f: &BiPolynomial| f.bidegree().ok_or_else(|| Error::NotBihomogeneous(f.to_string()));
        if f0.is_zero() || f1.is_zero() {
            return Err(Error::InvalidInput("curve equations must be nonzero".into()));
        }
        let (d0, e0) = bideg(&f0)?;
        let (e1, d1) = bideg(&f1)?;
        if e0 != 0 || d0 == 0 {
            return Err(Error::InvalidInput(format!("f0 = {f0} must be a nonconstant form in x only")));
        }
        if e1 != 0 || d1 == 0 {
            return Err(Error::InvalidInput(format!("f1 = {f1} must be a nonconstant form in y only")));
        }
        Ok(Self { f0, f1, d0, d1 })
    }

    pub fn parse(f0: &str, f1: &str) -> Result<Self> {
        let u = VariableUniverse::new(2);
        Self::new(BiPolynomial::parse(&u, f0)?, BiPolynomial::parse(&u, f1)?)
    }

    /// Coefficients drawn uniformly from the integers in `[-9, 9]`.
    pub fn random<R: Rng + ?Sized>(d0: u32, d1: u32, rng: &mut R) -> Self {
        let u = VariableUniverse::new(2);
        let draw = |a: u32, b: u32, rng: &mut R| loop {
            let f = BiPolynomial::from_terms(
                &u,
                monomials_of_bidegree(&u, a, b)
                    .into_iter()
                    .map(|m| (m, Rational::from_integer(rng.gen_range(-9i64..=9).into()))),
            );
            if !f.is_zero() {
                return f;
            }
        };
        let f0 = draw(d0, 0, rng);
        let f1 = draw(0, d1, rng);
        Self { f0, f1, d0, d1 }
    }

    pub fn f0(&self) -> &BiPolynomial {
        &self.f0
    }

    pub fn f1(&self) -> &BiPolynomial {
        &self.f1
    }

    pub fn degrees(&self) -> (u32, u32) {
        (self.d0, self.d1)
    }

    /// The pair obtained by exchanging `x` and `y`, so `f1` becomes the
    /// plane curve and `f0` the dual one.
    pub fn swapped(&self) -> Self {
        let u: Arc<VariableUniverse> = self.f0.universe().clone();
        let mut sub = Substitution::new(&u, &u);
        for i in 0..3 {
            sub.set_poly(&format!("x{}", i + 1), BiPolynomial::var(&u, u.y(i))).expect("standard names");
            sub.set_poly(&format!("y{}", i + 1), BiPolynomial::var(&u, u.x(i))).expect("standard names");
        }
        Self {
            f0: sub.apply(&self.f1).expect("same universe"),
            f1: sub.apply(&self.f0).expect("same universe"),
            d0: self.d1,
            d1: self.d0,
        }
    }
}

/// The flag variety `F2`: `<x1 y1 + x2 y2 + x3 y3>`.
pub fn incidence_ideal() -> Ideal {
    let u = VariableUniverse::new(2);
    Ideal::new(&u, vec![incidence_form(&u)]).expect("single generator")
}

/// `<f0, f1, x . y>`.
pub fn gamma_curve_ideal(pair: &PlaneCurvePair) -> Ideal {
    let u = pair.f0.universe().clone();
    Ideal::new(&u, vec![pair.f0.clone(), pair.f1.clone(), incidence_form(&u)]).expect("same universe")
}

#[derive(Debug, Clone, Serialize)]
pub struct CodimensionReport {
    pub projective_dimension: i64,
    pub expected: i64,
    pub excess: i64,
    pub holds: bool,
}

/// Dimension of `ideal` in `P² × P̌²` (from its lex initial ideal) against
/// `expected`.
pub fn codimension_probe(ideal: &Ideal, expected: i64) -> Result<CodimensionReport> {
    let dim = ideal.projective_dimension()?;
    Ok(CodimensionReport { projective_dimension: dim, expected, excess: dim - expected, holds: dim == expected })
}

/// `Γ` has dimension `dim F2 - 2 = 1`.
pub fn codimension_check(pair: &PlaneCurvePair) -> Result<CodimensionReport> {
    codimension_probe(&gamma_curve_ideal(pair), 1)
}

/// A line `x1 = 0` against the single dual point it defines: every point of
/// the line lies on it, so the intersection with `F2` is the whole line
/// instead of finitely many points.
pub fn excess_probe() -> Result<CodimensionReport> {
    let u = VariableUniverse::new(2);
    let ideal = Ideal::parse(&u, &["x1", "y2", "y3", "x1*y1+x2*y2+x3*y3"])?;
    codimension_probe(&ideal, 0)
}

/// Diagonal Hilbert polynomial of `Γ`.
pub fn gamma_hilbert_polynomial(pair: &PlaneCurvePair) -> Result<HilbertPolynomialQ> {
    let ideal = gamma_curve_ideal(pair);
    let dim_bound = ideal.projective_dimension()?.max(0) as u32;
    let top = (2 * dim_bound + 4).max(pair.d0 + pair.d1 + 4);
    let table = tabulate(&ideal, 1..=top, HilbertMethod::InitialIdealCount)?;
    interpolate_hilbert_polynomial(&table, dim_bound as usize)
}

/// `sum_S (-1)^|S| C(t-a_S+2, 2) C(t-b_S+2, 2)` over subsets `S` of
/// `{f0, f1, x . y}` with total bidegree `(a_S, b_S)`: the Hilbert
/// polynomial of a complete intersection of those bidegrees in
/// `P² × P̌²`.
pub fn koszul_reference(d0: u32, d1: u32) -> HilbertPolynomialQ {
    let degs = [(d0 as i64, 0i64), (0, d1 as i64), (1, 1)];
    let mut acc = HilbertPolynomialQ::from_integers(&[]);
    for mask in 0u32..8 {
        let (mut a, mut b) = (0, 0);
        for (k, &(da, db)) in degs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                a += da;
                b += db;
            }
        }
        let term = &HilbertPolynomialQ::binomial(2 - a, 2) * &HilbertPolynomialQ::binomial(2 - b, 2);
        acc = if mask.count_ones() % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub attempts: usize,
    pub retries: Vec<String>,
    pub f0: String,
    pub f1: String,
    pub hilbert_polynomial: Option<HilbertPolynomialQ>,
    pub matches_formula: bool,
    pub matches_koszul: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub d0: u32,
    pub d1: u32,
    pub seed: u64,
    pub trials: usize,
    pub formula: HilbertPolynomialQ,
    pub koszul_reference: HilbertPolynomialQ,
    pub formula_matches: usize,
    pub koszul_matches: usize,
    pub total_retries: usize,
    pub records: Vec<TrialRecord>,
    pub holds: bool,
}

fn run_trial(d0: u32, d1: u32, trial: usize, seed: u64, formula: &HilbertPolynomialQ, koszul: &HilbertPolynomialQ) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut retries = Vec::new();
    for attempt in 1..=MAX_ATTEMPTS {
        let pair = PlaneCurvePair::random(d0, d1, &mut rng);
        let outcome = codimension_check(&pair).and_then(|c| {
            if c.holds {
                gamma_hilbert_polynomial(&pair).map(Some)
            } else {
                Ok(None)
            }
        });
        match outcome {
            Ok(Some(poly)) => {
                return TrialRecord {
                    trial,
                    seed,
                    attempts: attempt,
                    retries,
                    f0: pair.f0.to_string(),
                    f1: pair.f1.to_string(),
                    matches_formula: &poly == formula,
                    matches_koszul: &poly == koszul,
                    hilbert_polynomial: Some(poly),
                };
            }
            Ok(None) => retries.push(format!("attempt {attempt}: intersection not of dimension 1")),
            Err(Error::NoStabilization { .. }) => retries.push(format!("attempt {attempt}: table did not stabilize")),
            Err(e) => retries.push(format!("attempt {attempt}: {e}")),
        }
    }
    TrialRecord {
        trial,
        seed,
        attempts: MAX_ATTEMPTS,
        retries,
        f0: String::new(),
        f1: String::new(),
        hilbert_polynomial: None,
        matches_formula: false,
        matches_koszul: false,
    }
}

/// Random generic pairs of bidegree `(d0, d1)`; each trial draws its own
/// seed from `seed` and retries while the intersection is not a curve or
/// its table does not stabilize.
pub fn xi_trials(d0: u32, d1: u32, trials: usize, seed: u64) -> Result<TrialReport> {
    if d0 == 0 || d1 == 0 {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    let formula = xi_formula(d0, d1);
    let koszul = koszul_reference(d0, d1);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.gen()).collect();
    let records: Vec<TrialRecord> = seeds
        .par_iter()
        .enumerate()
        .map(|(k, &s)| run_trial(d0, d1, k + 1, s, &formula, &koszul))
        .collect();
    let formula_matches = records.iter().filter(|r| r.matches_formula).count();
    let koszul_matches = records.iter().filter(|r| r.matches_koszul).count();
    Ok(TrialReport {
        d0,
        d1,
        seed,
        trials,
        formula,
        koszul_reference: koszul,
        formula_matches,
        koszul_matches,
        total_retries: records.iter().map(|r| r.retries.len()).sum(),
        holds: formula_matches == trials,
        records,
    })
}
