use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::linalg::{integer_row, rank_fraction_free};
use super::polynomial::{interpolate_hilbert_polynomial, HilbertPolynomialQ};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialOrderSpec};
use crate::polyring::monomials_of_bidegree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HilbertMethod {
    /// Standard monomials of the initial ideal under the default lex order.
    InitialIdealCount,
    /// `dim S_{i,j}` minus the exact rank of all bidegree-`(i,j)` multiples
    /// of the generators. Independent of any Gröbner computation.
    RankOracle,
}

impl HilbertMethod {
    pub fn name(self) -> &'static str {
        match self {
            Self::InitialIdealCount => "initial_ideal_count",
            Self::RankOracle => "rank_oracle",
        }
    }
}

fn check_input(ideal: &Ideal) -> Result<()> {
    ideal.check_bihomogeneous()?;
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_param_free()) {
        return Err(Error::ParametersPresent(g.to_string()));
    }
    Ok(())
}

/// `dim_k S_{i,j} / I_{i,j}`.
pub fn bigraded_hilbert_function(ideal: &Ideal, i: u32, j: u32, method: HilbertMethod) -> Result<u64> {
    check_input(ideal)?;
    match method {
        HilbertMethod::InitialIdealCount => {
            let lead = ideal.initial_ideal(&MonomialOrderSpec::lex(ideal.n()))?;
            let basis = monomials_of_bidegree(ideal.universe(), i, j);
            Ok(basis.iter().filter(|m| !lead.contains(m)).count() as u64)
        }
        HilbertMethod::RankOracle => Ok(rank_oracle(ideal, i, j)),
    }
}

pub fn diagonal_hilbert_function(ideal: &Ideal, t: u32, method: HilbertMethod) -> Result<u64> {
    bigraded_hilbert_function(ideal, t, t, method)
}

fn rank_oracle(ideal: &Ideal, i: u32, j: u32) -> u64 {
    let u = ideal.universe();
    let columns = monomials_of_bidegree(u, i, j);
    let index: HashMap<_, usize> = columns.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        let (a, b) = g.bidegree().expect("checked bihomogeneous");
        if a > i || b > j {
            continue;
        }
        for shift in monomials_of_bidegree(u, i - a, j - b) {
            rows.push(integer_row(g.terms().map(|(m, c)| (index[&m.mul(&shift)], c.clone()))));
        }
    }
    (columns.len() - rank_fraction_free(rows)) as u64
}

/// Diagonal Hilbert function values on a range of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFunctionTable {
    pub method: HilbertMethod,
    pub values: BTreeMap<u32, u64>,
}

#[derive(Serialize)]
struct Row {
    t: u32,
    value: u64,
    method: &'static str,
}

impl HilbertFunctionTable {
    pub fn new(method: HilbertMethod, values: impl IntoIterator<Item = (u32, u64)>) -> Self {
        Self { method, values: values.into_iter().collect() }
    }

    /// JSON rows `{t, value, method}`.
    pub fn to_json_rows(&self) -> serde_json::Value {
        let rows: Vec<Row> = self
            .values
            .iter()
            .map(|(&t, &value)| Row { t, value, method: self.method.name() })
            .collect();
        serde_json::to_value(rows).expect("plain data")
    }
}

/// Tabulates the diagonal Hilbert function over `ts`. Distinct `t` are
/// computed concurrently; the Gröbner basis is computed once up front.
pub fn tabulate(ideal: &Ideal, ts: impl IntoIterator<Item = u32>, method: HilbertMethod) -> Result<HilbertFunctionTable> {
    check_input(ideal)?;
    if method == HilbertMethod::InitialIdealCount {
        ideal.groebner(&MonomialOrderSpec::lex(ideal.n()))?;
    }
    let ts: Vec<u32> = ts.into_iter().collect();
    let values = ts
        .par_iter()
        .map(|&t| diagonal_hilbert_function(ideal, t, method).map(|v| (t, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertFunctionTable::new(method, values))
}

/// Hilbert polynomial from the default range `1..=2·dim_bound+4`.
pub fn hilbert_polynomial(ideal: &Ideal, dim_bound: usize, method: HilbertMethod) -> Result<HilbertPolynomialQ> {
    let table = tabulate(ideal, 1..=(2 * dim_bound as u32 + 4), method)?;
    interpolate_hilbert_polynomial(&table, dim_bound)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VariableUniverse;

    fn both(ideal: &Ideal, t: u32) -> u64 {
        let a = diagonal_hilbert_function(ideal, t, HilbertMethod::InitialIdealCount).unwrap();
        let b = diagonal_hilbert_function(ideal, t, HilbertMethod::RankOracle).unwrap();
        assert_eq!(a, b, "methods disagree at t={t} for {ideal:?}");
        a
    }

    #[test]
    fn single_minor_n1() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2-x2*y1"]).unwrap();
        // C(2t+1, 1)
        assert_eq!(both(&i, 2), 5);
    }

    #[test]
    fn principal_monomial() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2"]).unwrap();
        for t in 0..=6u64 {
            // all (t+1)^2 monomials minus the t^2 multiples of x1*y2
            assert_eq!(both(&i, t as u32), 2 * t + 1);
        }
    }

    #[test]
    fn unit_ideal_is_zero() {
        let u = VariableUniverse::new(2);
        let i = Ideal::parse(&u, &["1"]).unwrap();
        for t in 0..=3 {
            assert_eq!(both(&i, t), 0);
        }
    }

    #[test]
    fn off_diagonal_generators() {
        let u = VariableUniverse::new(2);
        let i = Ideal::parse(&u, &["x1^2+x2*x3", "y1*y2-3*y3^2", "x1*y1+x2*y2+x3*y3"]).unwrap();
        for t in 0..=4 {
            both(&i, t);
        }
        let a = bigraded_hilbert_function(&i, 3, 1, HilbertMethod::InitialIdealCount).unwrap();
        let b = bigraded_hilbert_function(&i, 3, 1, HilbertMethod::RankOracle).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_input() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1+y1"]).unwrap();
        assert!(matches!(
            diagonal_hilbert_function(&i, 1, HilbertMethod::RankOracle),
            Err(Error::NotBihomogeneous(_))
        ));
        let c = VariableUniverse::chart(1);
        let j = Ideal::parse(&c, &["x1*y2-d1*x2*y1"]).unwrap();
        assert!(matches!(
            diagonal_hilbert_function(&j, 1, HilbertMethod::InitialIdealCount),
            Err(Error::ParametersPresent(_))
        ));
    }

    #[test]
    fn table_json_rows() {
        let u = VariableUniverse::new(1);
        let i = Ideal::parse(&u, &["x1*y2"]).unwrap();
        let table = tabulate(&i, 1..=2, HilbertMethod::RankOracle).unwrap();
        assert_eq!(
            table.to_json_rows().to_string(),
            r#"[{"method":"rank_oracle","t":1,"value":3},{"method":"rank_oracle","t":2,"value":5}]"#
        );
    }
}
