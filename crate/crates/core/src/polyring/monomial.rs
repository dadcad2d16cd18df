use std::fmt;

use super::universe::VariableUniverse;

/// Exponent vector over the variables of a [`VariableUniverse`].
///
/// The derived `Ord` is lex in variable-index order, which is also the
/// default monomial order (`x1 > … > x{n+1} > y1 > … > y{n+1} > params`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiMonomial {
    exps: Vec<u32>,
}

impl BiMonomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[idx] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `(x-degree, y-degree)`; parameters do not count.
    pub fn bidegree(&self, n: usize) -> (u32, u32) {
        let dx = self.exps[..=n].iter().sum();
        let dy = self.exps[n + 1..2 * n + 2].iter().sum();
        (dx, dy)
    }

    /// True when every parameter exponent is zero.
    pub fn is_param_free(&self, n: usize) -> bool {
        self.exps[2 * n + 2..].iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Self { exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect() })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `x1^2*y3`-style rendering; `1` for the unit monomial.
    pub fn render(&self, universe: &VariableUniverse) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(universe.name(i).to_string()),
                _ => parts.push(format!("{}^{}", universe.name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Every monomial with x-degree `a`, y-degree `b` and no parameters, in
/// decreasing lex order. There are `C(a+n, n) * C(b+n, n)` of them.
pub fn monomials_of_bidegree(universe: &VariableUniverse, a: u32, b: u32) -> Vec<BiMonomial> {
    let n = universe.n();
    let xs = compositions(a, n + 1);
    let ys = compositions(b, n + 1);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for ex in &xs {
        for ey in &ys {
            let mut exps = vec![0; universe.nvars()];
            exps[..=n].copy_from_slice(ex);
            exps[n + 1..2 * n + 2].copy_from_slice(ey);
            out.push(BiMonomial { exps });
        }
    }
    out
}

/// Weak compositions of `total` into `parts` parts, lex-decreasing.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}
