use std::sync::Arc;

use super::ideals::incidence_form;
use super::matrix::ChartPoint;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{BiPolynomial, Rational, Substitution, VariableUniverse};

/// Chart coordinates as polynomials: `x' = x u`, `y' = y (u^-1)^T`, and the
/// entries of `u^-1`, all in the parameters `u{i}_{j}`.
#[derive(Debug, Clone)]
pub struct ChartCoordinates {
    pub x_prime: Vec<BiPolynomial>,
    pub y_prime: Vec<BiPolynomial>,
    pub u: Vec<Vec<BiPolynomial>>,
    pub u_inverse: Vec<Vec<BiPolynomial>>,
}

pub fn chart_coordinates(universe: &Arc<VariableUniverse>) -> Result<ChartCoordinates> {
    let n = universe.n();
    let zero = BiPolynomial::zero(universe);
    let one = BiPolynomial::one(universe);
    let mut u = vec![vec![zero.clone(); n + 1]; n + 1];
    for i in 0..=n {
        u[i][i] = one.clone();
        for j in 0..i {
            u[i][j] = BiPolynomial::var_named(universe, &format!("u{}_{}", i + 1, j + 1))?;
        }
    }
    // forward substitution for the unitriangular inverse
    let mut v = vec![vec![zero.clone(); n + 1]; n + 1];
    for j in 0..=n {
        v[j][j] = one.clone();
        for i in j + 1..=n {
            let mut acc = zero.clone();
            for k in j..i {
                acc = &acc + &(&u[i][k] * &v[k][j]);
            }
            v[i][j] = -&acc;
        }
    }
    let x_prime = (0..=n)
        .map(|j| {
            (j..=n).fold(zero.clone(), |acc, i| &acc + &(&u[i][j] * &BiPolynomial::var(universe, universe.x(i))))
        })
        .collect();
    let y_prime = (0..=n)
        .map(|j| {
            (0..=j).fold(zero.clone(), |acc, i| &acc + &(&v[j][i] * &BiPolynomial::var(universe, universe.y(i))))
        })
        .collect();
    Ok(ChartCoordinates { x_prime, y_prime, u, u_inverse: v })
}

/// The family ideal over the standard chart with parameters `d`, `u`.
pub fn family_ideal_j(n: usize) -> Ideal {
    family_ideal_j_in(&VariableUniverse::chart(n)).expect("chart universe has all chart parameters")
}

/// The family ideal built in any universe containing the chart parameters:
/// `x'_i y'_j - (d_i ... d_{j-1}) y'_i x'_j` for `i < j`, then `x . y`.
pub fn family_ideal_j_in(universe: &Arc<VariableUniverse>) -> Result<Ideal> {
    let n = universe.n();
    let coords = chart_coordinates(universe)?;
    let d: Vec<BiPolynomial> =
        (1..=n).map(|k| BiPolynomial::var_named(universe, &format!("d{k}"))).collect::<Result<_>>()?;
    let mut gens = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let dprod = d[i..j].iter().fold(BiPolynomial::one(universe), |acc, f| &acc * f);
            let lhs = &coords.x_prime[i] * &coords.y_prime[j];
            let rhs = &(&dprod * &coords.y_prime[i]) * &coords.x_prime[j];
            gens.push(&lhs - &rhs);
        }
    }
    gens.push(incidence_form(universe));
    Ideal::new(universe, gens)
}

/// Specializes the chart parameters of a family ideal at `p`.
pub fn evaluate_family_at(j: &Ideal, p: &ChartPoint) -> Result<Ideal> {
    if j.n() != p.n() {
        return Err(Error::InvalidInput(format!("family has n = {}, point has n = {}", j.n(), p.n())));
    }
    let values = p.param_values();
    let refs: Vec<(&str, Rational)> = values.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    let sub = Substitution::specialize(j.universe(), &refs)?;
    let gens = j.generators().iter().map(|g| sub.apply(g)).collect::<Result<Vec<_>>>()?;
    Ideal::new(sub.target(), gens)
}
