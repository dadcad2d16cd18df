use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{BiMonomial, BiPolynomial, Rational, VariableUniverse};

/// The diagonal matrix `d^(i)`: the `i`th exterior power of
/// `diag(1, d1, d1 d2, ..., d1...dn)` with the common factor
/// `d1^(i-1) d2^(i-2) ... d_{i-1}` removed.
///
/// Each diagonal slot corresponds to an `i`-subset of `{1, ..., n+1}`, taken
/// in lexicographic order, and holds a monomial in `d1..dn` stored as an
/// exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaksovDiagonal {
    pub level: usize,
    pub subsets: Vec<Vec<usize>>,
    pub exponents: Vec<Vec<u32>>,
}

impl LaksovDiagonal {
    pub fn n(&self) -> usize {
        self.exponents.first().map_or(0, Vec::len)
    }

    pub fn evaluate(&self, d: &[Rational]) -> Result<Vec<Rational>> {
        if d.len() != self.n() {
            return Err(Error::InvalidInput(format!("expected {} values of d, got {}", self.n(), d.len())));
        }
        Ok(self
            .exponents
            .iter()
            .map(|e| {
                e.iter()
                    .zip(d)
                    .fold(Rational::one(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .collect())
    }

    /// The diagonal entries as polynomials in the parameters `d1..dn` of
    /// `universe`.
    pub fn to_polys(&self, universe: &Arc<VariableUniverse>) -> Result<Vec<BiPolynomial>> {
        let idx: Vec<usize> = (1..=self.n()).map(|k| universe.index_of(&format!("d{k}"))).collect::<Result<_>>()?;
        Ok(self
            .exponents
            .iter()
            .map(|e| {
                let mut exps = vec![0u32; universe.nvars()];
                for (k, &v) in e.iter().enumerate() {
                    exps[idx[k]] = v;
                }
                BiPolynomial::monomial(universe, BiMonomial::from_exponents(exps), Rational::one())
            })
            .collect())
    }

    pub fn render(&self) -> Vec<String> {
        self.exponents
            .iter()
            .map(|e| {
                let factors: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("d{}", i + 1) } else { format!("d{}^{}", i + 1, k) })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            })
            .collect()
    }
}

fn subsets(size: usize, of: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, of: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=of - left {
            cur.push(s);
            go(s + 1, of, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, of, size, &mut Vec::new(), &mut out);
    out
}

/// `d^(1), ..., d^(n)`.
pub fn laksov_diagonal_matrices(n: usize) -> Vec<LaksovDiagonal> {
    (1..=n)
        .map(|level| {
            let subs = subsets(level, n + 1);
            let exponents = subs
                .iter()
                .map(|s| {
                    // slot s (zero-based) of d^(1) is d1...ds, so d_k divides
                    // it exactly when s >= k
                    (1..=n)
                        .map(|k| {
                            let raw = s.iter().filter(|&&slot| slot >= k).count() as u32;
                            raw - level.saturating_sub(k) as u32
                        })
                        .collect()
                })
                .collect();
            LaksovDiagonal {
                level,
                subsets: subs.into_iter().map(|s| s.into_iter().map(|v| v + 1).collect()).collect(),
                exponents,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::q;

    #[test]
    fn three_by_three_example() {
        let ds = laksov_diagonal_matrices(3);
        assert_eq!(ds.len(), 3);
        assert_eq!(ds[0].render(), ["1", "d1", "d1*d2", "d1*d2*d3"]);
        assert_eq!(ds[1].render(), ["1", "d2", "d2*d3", "d1*d2", "d1*d2*d3", "d1*d2^2*d3"]);
        assert_eq!(ds[2].render(), ["1", "d3", "d2*d3", "d1*d2*d3"]);
        assert_eq!(ds[1].subsets[3], vec![2, 3]);
    }

    #[test]
    fn ones_give_identity() {
        for n in 1..=5 {
            for m in laksov_diagonal_matrices(n) {
                assert!(m.evaluate(&vec![q(1); n]).unwrap().iter().all(One::is_one));
            }
        }
    }

    #[test]
    fn matches_exterior_power_before_cancelling() {
        let d = [q(2), q(3), q(5), q(7)];
        let mut prefix = vec![q(1)];
        for v in &d {
            let next = prefix.last().unwrap() * v;
            prefix.push(next);
        }
        for m in laksov_diagonal_matrices(4) {
            let i = m.level;
            let common: Rational = (1..i).map(|k| num_traits::pow(d[k - 1].clone(), i - k)).product();
            let vals = m.evaluate(&d).unwrap();
            for (s, v) in m.subsets.iter().zip(vals) {
                let minor: Rational = s.iter().map(|&slot| prefix[slot - 1].clone()).product();
                assert_eq!(minor, v * &common);
            }
        }
    }

    #[test]
    fn symbolic_entries() {
        let u = VariableUniverse::chart(2);
        let polys = laksov_diagonal_matrices(2)[0].to_polys(&u).unwrap();
        let r: Vec<String> = polys.iter().map(ToString::to_string).collect();
        assert_eq!(r, ["1", "d1", "d1*d2"]);
    }
}
