use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::family::{evaluate_family_at, family_ideal_j, family_ideal_j_in};
use super::matrix::{mat_mul, ChartPoint, TorusElement};
use crate::error::{Error, Result};
use crate::polyring::{format_rational, BiMonomial, BiPolynomial, Rational, Substitution, VariableUniverse};

/// How one generator of the family ideal transforms under the torus.
#[derive(Debug, Clone, Serialize)]
pub struct TorusScalar {
    pub generator: usize,
    pub label: String,
    pub scalar: String,
    pub expected: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorusReport {
    pub n: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<ChartPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<String>>,
    pub parameter_law_holds: bool,
    pub generators: Vec<TorusScalar>,
    pub holds: bool,
}

fn pair_labels(n: usize) -> Vec<(String, Option<(usize, usize)>)> {
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push((format!("({i},{j})"), Some((i, j))));
        }
    }
    out.push(("x.y".to_string(), None));
    out
}

/// Numeric check at one point: the fiber over `c . p`, pulled back along
/// `x_k -> x_k / C_k`, `y_k -> y_k C_k` (`C_k = c1...c_{k-1}`), equals the
/// fiber over `p` generator by generator up to the scalar
/// `c_i ... c_{j-1}` (and `1` for the incidence form).
pub fn torus_action_check(p: &ChartPoint, c: &TorusElement) -> Result<TorusReport> {
    let n = p.n();
    let cp = c.act(p)?;
    let cm = c.c1_matrix();
    let parameter_law_holds = mat_mul(&cm, &p.u().to_vec()) == mat_mul(&cp.u().to_vec(), &cm);

    let j = family_ideal_j(n);
    let fp = evaluate_family_at(&j, p)?;
    let fcp = evaluate_family_at(&j, &cp)?;
    let universe = fp.universe().clone();
    let prefix = c.prefix_products();
    let mut sub = Substitution::new(&universe, &universe);
    for k in 0..=n {
        let inv = Rational::one() / &prefix[k];
        sub.set_poly(&format!("x{}", k + 1), BiPolynomial::var(&universe, universe.x(k)).scale(&inv))?;
        sub.set_poly(&format!("y{}", k + 1), BiPolynomial::var(&universe, universe.y(k)).scale(&prefix[k]))?;
    }

    let mut generators = Vec::new();
    for (idx, (label, pair)) in pair_labels(n).into_iter().enumerate() {
        let g = &fp.generators()[idx];
        let h = sub.apply(&fcp.generators()[idx])?;
        let expected = match pair {
            Some((a, b)) => c.segment(a, b),
            None => Rational::one(),
        };
        let (scalar, holds) = match g.lex_leading_term() {
            None => (None, h.is_zero()),
            Some((m, gc)) => {
                let lam = h.coefficient(m) / gc;
                let ok = h == g.scale(&lam) && lam == expected;
                (Some(lam), ok)
            }
        };
        generators.push(TorusScalar {
            generator: idx + 1,
            label,
            scalar: scalar.as_ref().map_or_else(|| "any".to_string(), format_rational),
            expected: format_rational(&expected),
            holds,
        });
    }
    let holds = parameter_law_holds && generators.iter().all(|g| g.holds);
    Ok(TorusReport {
        n,
        mode: "numeric",
        point: Some(p.clone()),
        torus: Some(c.coordinates().iter().map(format_rational).collect()),
        parameter_law_holds,
        generators,
        holds,
    })
}

fn c_segment(universe: &Arc<VariableUniverse>, i: usize, j: usize) -> Result<BiPolynomial> {
    (i..j).try_fold(BiPolynomial::one(universe), |acc, k| Ok(&acc * &BiPolynomial::var_named(universe, &format!("c{k}"))?))
}

fn render_c_monomial(universe: &Arc<VariableUniverse>, m: &BiMonomial) -> String {
    let s = m.render(universe);
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

/// The same identity with `u`, `d`, `c` all symbolic. To avoid inverses the
/// x-substitution is scaled by `C_{n+1}`: `x_k -> x_k c_k ... c_n`, so each
/// image is `C_{n+1}` times the expected scalar times the generator.
pub fn torus_action_symbolic(n: usize) -> Result<TorusReport> {
    let universe = VariableUniverse::chart_with_torus(n);
    let j = family_ideal_j_in(&universe)?;
    let mut sub = Substitution::new(&universe, &universe);
    for i in 2..=n + 1 {
        for jj in 1..i {
            let name = format!("u{i}_{jj}");
            let img = &BiPolynomial::var_named(&universe, &name)? * &c_segment(&universe, jj, i)?;
            sub.set_poly(&name, img)?;
        }
    }
    for i in 1..=n {
        let name = format!("d{i}");
        let ci = BiPolynomial::var_named(&universe, &format!("c{i}"))?;
        sub.set_poly(&name, &(&ci * &ci) * &BiPolynomial::var_named(&universe, &name)?)?;
    }
    for k in 1..=n + 1 {
        let x = BiPolynomial::var(&universe, universe.x(k - 1));
        let y = BiPolynomial::var(&universe, universe.y(k - 1));
        sub.set_poly(&format!("x{k}"), &x * &c_segment(&universe, k, n + 1)?)?;
        sub.set_poly(&format!("y{k}"), &y * &c_segment(&universe, 1, k)?)?;
    }

    // parameter law c^(1) u = u'' c^(1), entrywise C_i u_ij = u''_ij C_j
    let mut parameter_law_holds = true;
    for i in 2..=n + 1 {
        for jj in 1..i {
            let u = BiPolynomial::var_named(&universe, &format!("u{i}_{jj}"))?;
            let lhs = &c_segment(&universe, 1, i)? * &u;
            let rhs = &sub.apply(&u)? * &c_segment(&universe, 1, jj)?;
            parameter_law_holds &= lhs == rhs;
        }
    }

    let full = c_segment(&universe, 1, n + 1)?;
    let full_m = full.terms().next().map(|(m, _)| m.clone()).expect("monomial");
    let mut generators = Vec::new();
    for (idx, (label, pair)) in pair_labels(n).into_iter().enumerate() {
        let g = &j.generators()[idx];
        let h = sub.apply(g)?;
        let expected = match pair {
            Some((a, b)) => c_segment(&universe, a, b)?,
            None => BiPolynomial::one(&universe),
        };
        let holds = h == &(&full * &expected) * g;
        let observed = match (g.lex_leading_term(), h.lex_leading_term()) {
            (Some((gm, _)), Some((hm, _))) => gm
                .quotient_of(hm)
                .and_then(|q| full_m.quotient_of(&q))
                .map(|q| render_c_monomial(&universe, &q))
                .unwrap_or_else(|| "none".to_string()),
            _ => "none".to_string(),
        };
        let expected_m = expected.terms().next().map(|(m, _)| m.clone()).expect("monomial");
        generators.push(TorusScalar {
            generator: idx + 1,
            label,
            scalar: observed,
            expected: render_c_monomial(&universe, &expected_m),
            holds,
        });
    }
    let holds = parameter_law_holds && generators.iter().all(|g| g.holds);
    Ok(TorusReport { n, mode: "symbolic", point: None, torus: None, parameter_law_holds, generators, holds })
}

/// The orbit of `p` under the torus, written as polynomials in `c`.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitLimitReport {
    pub point: ChartPoint,
    pub orbit: Vec<(String, String)>,
    pub limit: ChartPoint,
    pub holds: bool,
}

/// Checks that `(I, 0)` lies in the closure of the orbit of `p`: every
/// coordinate of `c . p` is a polynomial in `c` without constant term, so
/// its value at `c = 0` is that of `(I, 0)`.
pub fn closed_orbit_limit_check(p: &ChartPoint) -> Result<OrbitLimitReport> {
    let n = p.n();
    let universe = VariableUniverse::with_params(n, (1..=n).map(|k| format!("c{k}")).collect())?;
    let mut coords = Vec::new();
    for i in 2..=n + 1 {
        for j in 1..i {
            let v = &p.u()[i - 1][j - 1];
            coords.push((format!("u{i}_{j}"), c_segment(&universe, j, i)?.scale(v)));
        }
    }
    for i in 1..=n {
        let ci = BiPolynomial::var_named(&universe, &format!("c{i}"))?;
        coords.push((format!("d{i}"), (&ci * &ci).scale(&p.d()[i - 1])));
    }
    let zero = vec![Rational::zero(); universe.nvars()];
    let mut values = Vec::new();
    for (name, f) in &coords {
        values.push((name.clone(), f.eval(&zero)?));
    }
    let limit_d: Vec<Rational> = values[values.len() - n..].iter().map(|(_, v)| v.clone()).collect();
    let limit_rows: Vec<Vec<Rational>> = (1..=n)
        .map(|r| {
            let start = r * (r - 1) / 2;
            values[start..start + r].iter().map(|(_, v)| v.clone()).collect()
        })
        .collect();
    let limit = ChartPoint::from_strict_lower(&limit_rows, limit_d)?;
    let no_constant = coords.iter().all(|(_, f)| f.terms().all(|(m, _)| !m.is_one()));
    if p.n() == 0 {
        return Err(Error::InvalidChartPoint("empty point".into()));
    }
    Ok(OrbitLimitReport {
        point: p.clone(),
        orbit: coords.iter().map(|(k, f)| (k.clone(), f.to_string())).collect(),
        holds: no_constant && limit == ChartPoint::origin(n),
        limit,
    })
}
