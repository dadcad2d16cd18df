use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::function::HilbertFunctionTable;
use crate::error::{Error, Result};
use crate::polyring::{format_rational, Rational};

/// A univariate polynomial in `t` with rational coefficients (lowest degree
/// first), plus the least sampled `t` from which the Hilbert function agreed
/// with it, when known.
///
/// Equality compares the polynomial only, not the threshold.
#[derive(Debug, Clone)]
pub struct HilbertPolynomialQ {
    coefficients: Vec<Rational>,
    pub stabilization_threshold: Option<u32>,
}

impl PartialEq for HilbertPolynomialQ {
    fn eq(&self, other: &Self) -> bool {
        self.coefficients == other.coefficients
    }
}

impl Eq for HilbertPolynomialQ {}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(|v| v.is_zero()) {
        c.pop();
    }
    c
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[Rational], b: &[Rational], sign: i64) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y * int(sign);
    }
    trim(out)
}

/// `C(t + shift, k)` as a polynomial in `t`.
fn binomial_poly(shift: i64, k: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::one()];
    for i in 0..k as i64 {
        let factor = vec![int(shift - i) / int(i + 1), Rational::one() / int(i + 1)];
        acc = poly_mul(&acc, &factor);
    }
    acc
}

impl HilbertPolynomialQ {
    pub fn from_coefficients(coefficients: Vec<Rational>) -> Self {
        Self { coefficients: trim(coefficients), stabilization_threshold: None }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coefficients.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficients.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = int(t);
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    /// Coordinates in the basis `C(t+k, k)`, `k = 0..=degree`.
    pub fn binomial_coordinates(&self) -> Vec<Rational> {
        let mut rest = self.coefficients.clone();
        let mut coords = vec![Rational::zero(); rest.len()];
        while let Some(k) = rest.len().checked_sub(1) {
            // C(t+k, k) has leading coefficient 1/k!
            let lead = rest[k].clone();
            let fact = (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i));
            let a = lead * fact;
            rest = poly_add(&rest, &poly_mul(&binomial_poly(k as i64, k), std::slice::from_ref(&a)), -1);
            coords[k] = a;
        }
        coords
    }

    /// True iff all binomial coordinates are integers.
    pub fn is_integer_valued(&self) -> bool {
        self.binomial_coordinates().iter().all(|c| c.is_integer())
    }

    /// Human-readable form such as `4t^2+4t+1`, `2`, `0`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            let body = format_rational(&abs);
            let coeff = if k > 0 && abs.is_one() {
                String::new()
            } else if k > 0 && !abs.is_integer() {
                format!("({body})")
            } else {
                body
            };
            out.push_str(&coeff);
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl HilbertPolynomialQ {
    /// `C(t + shift, k)` as a polynomial in `t`.
    pub fn binomial(shift: i64, k: usize) -> Self {
        Self::from_coefficients(binomial_poly(shift, k))
    }
}

impl std::ops::Add for &HilbertPolynomialQ {
    type Output = HilbertPolynomialQ;
    fn add(self, rhs: Self) -> HilbertPolynomialQ {
        HilbertPolynomialQ::from_coefficients(poly_add(&self.coefficients, &rhs.coefficients, 1))
    }
}

impl std::ops::Sub for &HilbertPolynomialQ {
    type Output = HilbertPolynomialQ;
    fn sub(self, rhs: Self) -> HilbertPolynomialQ {
        HilbertPolynomialQ::from_coefficients(poly_add(&self.coefficients, &rhs.coefficients, -1))
    }
}

impl std::ops::Mul for &HilbertPolynomialQ {
    type Output = HilbertPolynomialQ;
    fn mul(self, rhs: Self) -> HilbertPolynomialQ {
        HilbertPolynomialQ::from_coefficients(poly_mul(&self.coefficients, &rhs.coefficients))
    }
}

impl fmt::Display for HilbertPolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for HilbertPolynomialQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HilbertPolynomialQ", 3)?;
        let coeffs: Vec<String> = self.coefficients.iter().map(format_rational).collect();
        st.serialize_field("coefficients", &coeffs)?;
        st.serialize_field("rendered", &self.render())?;
        st.serialize_field("stabilization_threshold", &self.stabilization_threshold)?;
        st.end()
    }
}

/// Fits a polynomial of degree at most `dim_bound` through the last
/// `dim_bound + 1` samples, requires the sample before them to agree too,
/// then reports the earliest `t` from which every later sample agrees.
pub fn interpolate_hilbert_polynomial(table: &HilbertFunctionTable, dim_bound: usize) -> Result<HilbertPolynomialQ> {
    let samples: Vec<(u32, u64)> = table.values.iter().map(|(&t, &v)| (t, v)).collect();
    // trailing run of consecutive t
    let mut start = samples.len();
    while start > 0 && (start == samples.len() || samples[start - 1].0 + 1 == samples[start].0) {
        start -= 1;
    }
    let run = &samples[start..];
    let need = dim_bound + 3;
    if run.len() < need {
        return Err(Error::InsufficientSamples { need, have: run.len() });
    }

    let fit = &run[run.len() - (dim_bound + 1)..];
    let t0 = fit[0].0 as i64;
    // Newton forward differences at t0
    let mut diffs: Vec<Rational> = fit.iter().map(|&(_, v)| int(v as i64)).collect();
    let mut coeffs: Vec<Rational> = Vec::new();
    for k in 0..diffs.len() {
        let delta_k = diffs[0].clone();
        coeffs = poly_add(&coeffs, &poly_mul(&binomial_poly(-t0, k), &[delta_k]), 1);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut poly = HilbertPolynomialQ::from_coefficients(coeffs);

    let agrees = |&(t, v): &(u32, u64)| poly.eval(t as i64) == int(v as i64);
    let check = &run[run.len() - (dim_bound + 2)];
    if !agrees(check) || !poly.is_integer_valued() {
        return Err(Error::NoStabilization { dim_bound, residuals: samples });
    }
    let mut first = run.len() - (dim_bound + 2);
    while first > 0 && agrees(&run[first - 1]) {
        first -= 1;
    }
    poly.stabilization_threshold = Some(run[first].0);
    Ok(poly)
}

/// `C(2t+n, n) − C(2(t−1)+n, n)`, the Hilbert polynomial of the graph of
/// the Gauss map of a smooth quadric in `Pⁿ`.
pub fn chi_graph(n: usize) -> HilbertPolynomialQ {
    assert!(n >= 1, "n must be at least 1");
    // C(2t+n, n) = prod_{k=1..n} (2t+k)/k
    let at = |offset: i64| {
        (1..=n as i64).fold(vec![Rational::one()], |acc, k| {
            poly_mul(&acc, &[int(2 * offset + k) / int(k), int(2) / int(k)])
        })
    };
    HilbertPolynomialQ::from_coefficients(poly_add(&at(0), &at(-1), -1))
}

/// `(d0+d1)·t − d0·d1·(d0+d1−4)/2`.
pub fn xi_formula(d0: u32, d1: u32) -> HilbertPolynomialQ {
    assert!(d0 >= 1 && d1 >= 1, "degrees must be positive");
    let (a, b) = (d0 as i64, d1 as i64);
    HilbertPolynomialQ::from_coefficients(vec![-int(a * b * (a + b - 4)) / int(2), int(a + b)])
}
