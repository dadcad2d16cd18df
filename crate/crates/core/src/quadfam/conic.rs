use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::SymmetricMatrixQ;
use crate::error::{Error, Result};
use crate::polyring::{format_rational, BiPolynomial, Rational, VariableUniverse};

const SEARCH_RADIUS: i64 = 24;

#[derive(Debug, Clone, Serialize)]
pub struct ConicReport {
    pub z: Vec<Vec<String>>,
    pub adjugate_identity_holds: bool,
    pub base_point: Option<Vec<String>>,
    pub samples_requested: usize,
    pub points_checked: usize,
    pub points_passed: usize,
    pub skipped: usize,
    pub sample_points: Vec<Vec<String>>,
    pub holds: bool,
}

fn xy_var(u: &Arc<VariableUniverse>, x: bool, i: usize) -> BiPolynomial {
    BiPolynomial::var(u, if x { u.x(i) } else { u.y(i) })
}

/// `sum_k v_k * m[k][j]` with `v` a vector of linear forms.
fn linear_times(u: &Arc<VariableUniverse>, x: bool, m: &[Vec<Rational>], j: usize) -> BiPolynomial {
    (0..3).fold(BiPolynomial::zero(u), |acc, k| &acc + &xy_var(u, x, k).scale(&m[k][j]))
}

/// Equations of the complete conic over `z`: minors of the rows `(x z, y)`,
/// minors of the rows `(x, y w)` with `w = adj z`, and `x . y`.
fn conic_equations(z: &SymmetricMatrixQ) -> Vec<BiPolynomial> {
    let u = VariableUniverse::new(2);
    let w = z.adjugate();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let xz_i = linear_times(&u, true, z.entries(), i);
            let xz_j = linear_times(&u, true, z.entries(), j);
            out.push(&(&xz_i * &xy_var(&u, false, j)) - &(&xz_j * &xy_var(&u, false, i)));
            let yw_i = linear_times(&u, false, w.entries(), i);
            let yw_j = linear_times(&u, false, w.entries(), j);
            out.push(&(&xy_var(&u, true, i) * &yw_j) - &(&xy_var(&u, true, j) * &yw_i));
        }
    }
    out.push(super::ideals::incidence_form(&u));
    out
}

/// `3 z adj(z) = trace(z adj(z)) I` for the given matrix.
fn adjugate_identity(z: &SymmetricMatrixQ) -> bool {
    let zw = z.mul(&z.adjugate());
    let tr: Rational = (0..3).map(|i| zw[i][i].clone()).sum();
    (0..3).all(|i| (0..3).all(|j| zw[i][j].clone() * Rational::from_integer(3.into()) == if i == j { tr.clone() } else { Rational::zero() }))
}

/// The identity `3 z w = trace(z w) I` with `z` the generic symmetric 3x3
/// matrix `(z{i}_{j})` and `w` its matrix of cofactors, as polynomials.
pub fn conic_adjugate_identity_symbolic() -> Result<bool> {
    let names: Vec<String> = (1..=3).flat_map(|i| (i..=3).map(move |j| format!("z{i}_{j}"))).collect();
    let u = VariableUniverse::with_params(2, names)?;
    let entry = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        BiPolynomial::var_named(&u, &format!("z{}_{}", a + 1, b + 1))
    };
    let z: Vec<Vec<BiPolynomial>> = (0..3).map(|i| (0..3).map(|j| entry(i, j)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let cofactor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&k| k != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&k| k != c).collect();
        let det = &(&z[rows[0]][cols[0]] * &z[rows[1]][cols[1]]) - &(&z[rows[0]][cols[1]] * &z[rows[1]][cols[0]]);
        if (r + c).is_multiple_of(2) {
            det
        } else {
            -&det
        }
    };
    let w: Vec<Vec<BiPolynomial>> = (0..3).map(|i| (0..3).map(|j| cofactor(j, i)).collect()).collect();
    let zw: Vec<Vec<BiPolynomial>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| (0..3).fold(BiPolynomial::zero(&u), |acc, k| &acc + &(&z[i][k] * &w[k][j])))
                .collect()
        })
        .collect();
    let trace = &(&zw[0][0] + &zw[1][1]) + &zw[2][2];
    let three = Rational::from_integer(3.into());
    Ok((0..3).all(|i| {
        (0..3).all(|j| zw[i][j].scale(&three) == if i == j { trace.clone() } else { BiPolynomial::zero(&u) })
    }))
}

fn integer_matrix(z: &SymmetricMatrixQ) -> Vec<Vec<BigInt>> {
    let l = z.entries().iter().flatten().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    z.entries()
        .iter()
        .map(|row| row.iter().map(|v| (v * Rational::from_integer(l.clone())).to_integer()).collect())
        .collect()
}

fn form(z: &[Vec<BigInt>], a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc += &a[i] * &z[i][j] * &b[j];
        }
    }
    acc
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let sign = v.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    v.into_iter().map(|x| x / &g * &sign).collect()
}

/// The first primitive integer vector on the conic, scanning boxes of
/// growing radius.
fn find_base_point(z: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    for r in 1..=SEARCH_RADIUS {
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    if a.abs().max(b.abs()).max(c.abs()) != r {
                        continue;
                    }
                    let v = vec![BigInt::from(a), BigInt::from(b), BigInt::from(c)];
                    if form(z, &v, &v).is_zero() {
                        return Some(primitive(v));
                    }
                }
            }
        }
    }
    None
}

fn parallel(a: &[BigInt], b: &[BigInt]) -> bool {
    (0..3).all(|i| (i + 1..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// Checks the global equations of the complete conic over `z`. Points on
/// `x z x^T = 0` are produced by intersecting random lines through one
/// rational point of the conic; degenerate draws are skipped and counted.
pub fn conic_global_equations_check(z: &SymmetricMatrixQ, samples: usize, seed: u64) -> Result<ConicReport> {
    if z.size() != 3 {
        return Err(Error::InvalidInput("conic check needs a 3x3 matrix".into()));
    }
    if !z.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let identity = adjugate_identity(z);
    let eqs = conic_equations(z);
    let zi = integer_matrix(z);
    let base = find_base_point(&zi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut passed, mut skipped) = (0, 0, 0);
    let mut sample_points = Vec::new();
    match &base {
        None => skipped = samples,
        Some(p) => {
            for _ in 0..samples {
                let q: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
                if q.iter().all(Zero::is_zero) || parallel(p, &q) {
                    skipped += 1;
                    continue;
                }
                let qq = form(&zi, &q, &q);
                let x = if qq.is_zero() {
                    q
                } else {
                    // P + s Q with s = -2 B(P,Q) / Q(Q), cleared of denominators
                    let bpq = form(&zi, p, &q);
                    let num = -(BigInt::from(2) * bpq);
                    (0..3).map(|i| &p[i] * &qq + &num * &q[i]).collect()
                };
                let x = primitive(x);
                checked += 1;
                let xr: Vec<Rational> = x.iter().map(|v| Rational::from_integer(v.clone())).collect();
                let y = z.row_times(&xr);
                let point: Vec<Rational> = xr.iter().chain(y.iter()).cloned().collect();
                let on_conic = form(&zi, &x, &x).is_zero();
                let ok = on_conic && eqs.iter().all(|e| e.eval(&point).map(|v| v.is_zero()).unwrap_or(false));
                if ok {
                    passed += 1;
                }
                sample_points.push(x.iter().map(ToString::to_string).collect());
            }
        }
    }
    Ok(ConicReport {
        z: z.entries().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
        adjugate_identity_holds: identity,
        base_point: base.map(|p| p.iter().map(ToString::to_string).collect()),
        samples_requested: samples,
        points_checked: checked,
        points_passed: passed,
        skipped,
        sample_points,
        holds: identity && passed == checked,
    })
}
