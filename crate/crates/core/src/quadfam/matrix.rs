use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polyring::{format_rational, parse_rational, Rational};

pub(crate) type Matrix = Vec<Vec<Rational>>;

pub(crate) fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub(crate) fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Determinant by Gaussian elimination over ℚ.
pub(crate) fn determinant(a: &Matrix) -> Rational {
    let k = a.len();
    let mut m = a.clone();
    let mut det = Rational::one();
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..k {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Classical adjoint, `adj[i][j] = (-1)^(i+j) det(a without row j, column i)`.
pub(crate) fn adjugate(a: &Matrix) -> Matrix {
    let k = a.len();
    if k == 1 {
        return vec![vec![Rational::one()]];
    }
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let minor: Matrix = (0..k)
                        .filter(|&r| r != j)
                        .map(|r| (0..k).filter(|&c| c != i).map(|c| a[r][c].clone()).collect())
                        .collect();
                    let d = determinant(&minor);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect()
        })
        .collect()
}

/// A uniformly drawn rational with numerator in `[-bound, bound]` and
/// denominator in `[1, max_den]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_den: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=max_den.max(1));
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_den: i64) -> Rational {
    loop {
        let v = random_rational(rng, bound, max_den);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A symmetric `(n+1) x (n+1)` matrix with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrixQ {
    entries: Matrix,
}

impl SymmetricMatrixQ {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let k = entries.len();
        if k < 2 {
            return Err(Error::InvalidInput("matrix must be at least 2x2".into()));
        }
        if entries.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        for i in 0..k {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: identity(n + 1) }
    }

    pub fn diagonal(values: &[Rational]) -> Result<Self> {
        let k = values.len();
        let mut entries = vec![vec![Rational::zero(); k]; k];
        for (i, v) in values.iter().enumerate() {
            entries[i][i] = v.clone();
        }
        Self::new(entries)
    }

    /// The `n` with `size = n + 1`.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.entries)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn adjugate(&self) -> SymmetricMatrixQ {
        Self { entries: adjugate(&self.entries) }
    }

    pub fn trace(&self) -> Rational {
        (0..self.size()).map(|i| self.entries[i][i].clone()).sum()
    }

    pub fn mul(&self, other: &SymmetricMatrixQ) -> Matrix {
        mat_mul(&self.entries, &other.entries)
    }

    /// The row vector `x * self`.
    pub fn row_times(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.size())
            .map(|j| x.iter().zip(&self.entries).map(|(xi, row)| xi * &row[j]).sum())
            .collect()
    }

    /// `x * self * x^T`.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        self.row_times(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// A point `(u, d)` of the standard chart: `u` is lower unitriangular of
/// size `n+1`, `d = (d1, ..., dn)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartPoint {
    u: Matrix,
    d: Vec<Rational>,
}

impl ChartPoint {
    pub fn new(u: Vec<Vec<Rational>>, d: Vec<Rational>) -> Result<Self> {
        let n = d.len();
        if n == 0 {
            return Err(Error::InvalidChartPoint("d must have at least one entry".into()));
        }
        if u.len() != n + 1 || u.iter().any(|r| r.len() != n + 1) {
            return Err(Error::InvalidChartPoint(format!("u must be {0}x{0}", n + 1)));
        }
        for (i, row) in u.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let ok = match i.cmp(&j) {
                    std::cmp::Ordering::Less => v.is_zero(),
                    std::cmp::Ordering::Equal => v.is_one(),
                    std::cmp::Ordering::Greater => true,
                };
                if !ok {
                    return Err(Error::InvalidChartPoint(format!(
                        "u is not lower unitriangular at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { u, d })
    }

    /// `u` given by its strictly-lower rows: row `i` (for `i = 2..=n+1`)
    /// lists `u_{i,1}, ..., u_{i,i-1}`.
    pub fn from_strict_lower(rows: &[Vec<Rational>], d: Vec<Rational>) -> Result<Self> {
        let n = d.len();
        if rows.len() != n {
            return Err(Error::InvalidChartPoint(format!("expected {n} strictly-lower rows of u")));
        }
        let mut u = identity(n + 1);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::InvalidChartPoint(format!("row {} of u must have {} entries", r + 2, r + 1)));
            }
            for (j, v) in row.iter().enumerate() {
                u[r + 1][j] = v.clone();
            }
        }
        Self::new(u, d)
    }

    /// `(I, 0)`: the most special point.
    pub fn origin(n: usize) -> Self {
        Self { u: identity(n + 1), d: vec![Rational::zero(); n] }
    }

    /// `(I, (1, ..., 1))`: the identity quadric.
    pub fn identity_quadric(n: usize) -> Self {
        Self { u: identity(n + 1), d: vec![Rational::one(); n] }
    }

    /// Random `u` entries; `d_i` is zero where `zero_d[i]`, otherwise a
    /// random nonzero rational.
    pub fn random<R: Rng + ?Sized>(n: usize, zero_d: &[bool], rng: &mut R) -> Self {
        let mut u = identity(n + 1);
        for (i, row) in u.iter_mut().enumerate() {
            for v in row.iter_mut().take(i) {
                *v = random_rational(rng, 5, 3);
            }
        }
        let d = (0..n)
            .map(|i| if zero_d.get(i).copied().unwrap_or(false) { Rational::zero() } else { random_nonzero(rng, 5, 3) })
            .collect();
        Self { u, d }
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn u(&self) -> &[Vec<Rational>] {
        &self.u
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.d.iter().all(|v| !v.is_zero())
    }

    /// `diag(1, d1, d1 d2, ..., d1...dn)`.
    pub fn d1_diagonal(&self) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for v in &self.d {
            let next = out.last().unwrap() * v;
            out.push(next);
        }
        out
    }

    /// The quadric `u d^(1) u^T` this point parametrizes.
    pub fn quadric(&self) -> SymmetricMatrixQ {
        let diag = self.d1_diagonal();
        let scaled: Matrix = self
            .u
            .iter()
            .map(|row| row.iter().zip(&diag).map(|(a, b)| a * b).collect())
            .collect();
        SymmetricMatrixQ { entries: mat_mul(&scaled, &transpose(&self.u)) }
    }

    /// Values for the chart parameters `d_i` and `u{i}_{j}`.
    pub fn param_values(&self) -> Vec<(String, Rational)> {
        let n = self.n();
        let mut out: Vec<(String, Rational)> =
            self.d.iter().enumerate().map(|(i, v)| (format!("d{}", i + 1), v.clone())).collect();
        for i in 2..=n + 1 {
            for j in 1..i {
                out.push((format!("u{i}_{j}"), self.u[i - 1][j - 1].clone()));
            }
        }
        out
    }

    pub fn strict_lower_rows(&self) -> Vec<Vec<Rational>> {
        (1..self.u.len()).map(|i| self.u[i][..i].to_vec()).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("chart point serializes")
    }

    /// Accepts `u` as strictly-lower rows, as lower rows including the
    /// unit diagonal, or as a full square matrix. Entries may be JSON
    /// integers or strings `"p"`, `"p/q"`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidChartPoint(m.to_string());
        let obj = value.as_object().ok_or_else(|| bad("expected an object with `u` and `d`"))?;
        let d = obj
            .get("d")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array `d`"))?
            .iter()
            .map(json_rational)
            .collect::<Result<Vec<_>>>()?;
        let n = d.len();
        let rows: Vec<Vec<Rational>> = match obj.get("u") {
            None => Vec::new(),
            Some(u) => u
                .as_array()
                .ok_or_else(|| bad("`u` must be an array of rows"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("`u` rows must be arrays"))?
                        .iter()
                        .map(json_rational)
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?,
        };
        if rows.is_empty() && obj.get("u").is_none() {
            return Self::new(identity(n + 1), d);
        }
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if rows.len() == n && lens.iter().enumerate().all(|(i, &l)| l == i + 1) {
            Self::from_strict_lower(&rows, d)
        } else if rows.len() == n + 1 && lens.iter().enumerate().all(|(i, &l)| l == i + 1) {
            if rows.iter().any(|r| !r.last().unwrap().is_one()) {
                return Err(bad("diagonal entries of u must be 1"));
            }
            let strict: Vec<Vec<Rational>> = rows[1..].iter().map(|r| r[..r.len() - 1].to_vec()).collect();
            Self::from_strict_lower(&strict, d)
        } else if rows.len() == n + 1 && lens.iter().all(|&l| l == n + 1) {
            Self::new(rows, d)
        } else {
            Err(bad("u has the wrong shape for the length of d"))
        }
    }

    /// A single point object or an array of them.
    pub fn parse_points(text: &str) -> Result<Vec<Self>> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidChartPoint(format!("invalid JSON: {e}")))?;
        match value {
            Value::Array(items) => items.iter().map(Self::from_json).collect(),
            other => Ok(vec![Self::from_json(&other)?]),
        }
    }
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(num) => match num.as_i64() {
            Some(i) => Ok(Rational::from_integer(BigInt::from(i))),
            None => Err(Error::InvalidChartPoint(format!(
                "non-integer number {num}; write fractions as strings like \"1/3\""
            ))),
        },
        other => Err(Error::InvalidChartPoint(format!("not a rational: {other}"))),
    }
}

fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl Serialize for ChartPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ChartPoint", 2)?;
        let rows: Vec<Vec<String>> = self.strict_lower_rows().iter().map(|r| rational_strings(r)).collect();
        s.serialize_field("u", &rows)?;
        s.serialize_field("d", &rational_strings(&self.d))?;
        s.end()
    }
}

/// An element `c = (c1, ..., cn)` of the torus acting on the chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    c: Vec<Rational>,
}

impl TorusElement {
    pub fn new(c: Vec<Rational>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidInput("torus element needs at least one coordinate".into()));
        }
        if let Some(i) = c.iter().position(Zero::is_zero) {
            return Err(Error::ZeroTorusEntry(i + 1));
        }
        Ok(Self { c })
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self { c: (0..n).map(|_| random_nonzero(rng, 5, 3)).collect() }
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.c
    }

    /// `C_k = c1 ... c_{k-1}` for `k = 1..=n+1` (so `C_1 = 1`).
    pub fn prefix_products(&self) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for v in &self.c {
            let next = out.last().unwrap() * v;
            out.push(next);
        }
        out
    }

    /// `c_i ... c_{j-1}` for one-based `i <= j`.
    pub fn segment(&self, i: usize, j: usize) -> Rational {
        self.c[i - 1..j - 1].iter().fold(Rational::one(), |acc, v| acc * v)
    }

    /// `c . (u, d)`: `u_ij -> u_ij c_j ... c_{i-1}`, `d_i -> c_i^2 d_i`.
    pub fn act(&self, p: &ChartPoint) -> Result<ChartPoint> {
        if p.n() != self.n() {
            return Err(Error::InvalidInput(format!("torus has n = {}, point has n = {}", self.n(), p.n())));
        }
        let mut u = p.u.clone();
        for (i, row) in u.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate().take(i) {
                *v *= self.segment(j + 1, i + 1);
            }
        }
        let d = p.d.iter().zip(&self.c).map(|(d, c)| d * c * c).collect();
        ChartPoint::new(u, d)
    }

    /// `c^(1) = diag(1, c1, c1 c2, ..., c1...cn)`.
    pub fn c1_matrix(&self) -> Matrix {
        let diag = self.prefix_products();
        let mut m = vec![vec![Rational::zero(); diag.len()]; diag.len()];
        for (i, v) in diag.into_iter().enumerate() {
            m[i][i] = v;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::{q, q_frac};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinant_and_adjugate() {
        let a = SymmetricMatrixQ::from_integers(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        assert_eq!(a.determinant(), q(18));
        let prod = a.mul(&a.adjugate());
        assert_eq!(prod, (0..3).map(|i| (0..3).map(|j| if i == j { q(18) } else { q(0) }).collect()).collect::<Matrix>());
        let sing = SymmetricMatrixQ::from_integers(&[&[1, 1], &[1, 1]]).unwrap();
        assert!(!sing.is_nondegenerate());
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymmetricMatrixQ::new(vec![vec![q(1), q(2)], vec![q(3), q(1)]]).is_err());
    }

    #[test]
    fn quadric_of_chart_point() {
        let p = ChartPoint::from_strict_lower(&[vec![q(2)]], vec![q(3)]).unwrap();
        let a = p.quadric();
        // u = [[1,0],[2,1]], D = diag(1,3): u D u^T = [[1,2],[2,7]]
        assert_eq!(a, SymmetricMatrixQ::from_integers(&[&[1, 2], &[2, 7]]).unwrap());
        assert_eq!(a.determinant(), q(3));
    }

    #[test]
    fn json_shapes_agree() {
        let strict = serde_json::json!({"u": [["1/2"], [0, "-3"]], "d": [1, "2/3"]});
        let lower = serde_json::json!({"u": [[1], ["1/2", 1], [0, -3, 1]], "d": [1, "2/3"]});
        let full = serde_json::json!({"u": [[1, 0, 0], ["1/2", 1, 0], [0, -3, 1]], "d": ["1", "2/3"]});
        let a = ChartPoint::from_json(&strict).unwrap();
        assert_eq!(a, ChartPoint::from_json(&lower).unwrap());
        assert_eq!(a, ChartPoint::from_json(&full).unwrap());
        assert_eq!(a.u()[1][0], q_frac(1, 2));
        let round = ChartPoint::from_json(&a.to_json()).unwrap();
        assert_eq!(a, round);
        assert_eq!(a.to_json(), serde_json::json!({"u": [["1/2"], ["0", "-3"]], "d": ["1", "2/3"]}));
    }

    #[test]
    fn json_rejects_bad_points() {
        for bad in [
            serde_json::json!({"u": [[1, 1], [0, 1]], "d": [1]}),
            serde_json::json!({"u": [["1/2"]], "d": [1, 2]}),
            serde_json::json!({"u": [[0.5]], "d": [1]}),
            serde_json::json!({"d": []}),
        ] {
            assert!(ChartPoint::from_json(&bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn torus_action_on_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = ChartPoint::random(3, &[false, true, false], &mut rng);
        let c = TorusElement::new(vec![q(2), q(3), q_frac(1, 5)]).unwrap();
        let cp = c.act(&p).unwrap();
        // c^(1) u = u'' c^(1)
        let cm = c.c1_matrix();
        assert_eq!(mat_mul(&cm, &p.u), mat_mul(&cp.u, &cm));
        assert_eq!(cp.d()[0], &p.d()[0] * q(4));
        assert!(cp.d()[1].is_zero());
        assert!(matches!(TorusElement::new(vec![q(1), q(0)]), Err(Error::ZeroTorusEntry(2))));
    }
}
