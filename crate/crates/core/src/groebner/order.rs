use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{BiMonomial, VariableUniverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Product order: the x-block is compared first (degree, then grevlex),
    /// then the y-block the same way.
    BlockLexXThenY,
}

/// A monomial order on the x/y variables. `permutation` lists the x/y
/// variable indices from most to least significant. Parameters always rank
/// below the x/y content and are compared lexicographically among
/// themselves, last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialOrderSpec {
    pub kind: OrderKind,
    pub permutation: Vec<usize>,
}

impl MonomialOrderSpec {
    /// `x1 > … > x{n+1} > y1 > … > y{n+1}`, the default order.
    pub fn lex(n: usize) -> Self {
        Self { kind: OrderKind::Lex, permutation: (0..2 * n + 2).collect() }
    }

    pub fn grevlex(n: usize) -> Self {
        Self { kind: OrderKind::Grevlex, permutation: (0..2 * n + 2).collect() }
    }

    pub fn block(n: usize) -> Self {
        Self { kind: OrderKind::BlockLexXThenY, permutation: (0..2 * n + 2).collect() }
    }

    pub fn with_permutation(kind: OrderKind, permutation: Vec<usize>) -> Result<Self> {
        let k = permutation.len();
        if k < 4 || !k.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("permutation of length {k}")));
        }
        let mut seen = vec![false; k];
        for &p in &permutation {
            if p >= k || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput(format!("{permutation:?} is not a permutation")));
            }
        }
        Ok(Self { kind, permutation })
    }

    pub fn random<R: Rng + ?Sized>(kind: OrderKind, n: usize, rng: &mut R) -> Self {
        let mut permutation: Vec<usize> = (0..2 * n + 2).collect();
        permutation.shuffle(rng);
        Self { kind, permutation }
    }

    /// Variables from least to most significant, reversed.
    pub fn reversed(&self) -> Self {
        let mut permutation = self.permutation.clone();
        permutation.reverse();
        Self { kind: self.kind, permutation }
    }

    fn n(&self) -> usize {
        self.permutation.len() / 2 - 1
    }

    pub fn fits(&self, universe: &VariableUniverse) -> bool {
        self.permutation.len() == universe.num_xy()
    }

    pub fn label(&self) -> String {
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
            OrderKind::BlockLexXThenY => "block",
        };
        format!("{kind}{:?}", self.permutation)
    }

    pub fn cmp(&self, a: &BiMonomial, b: &BiMonomial) -> Ordering {
        let xy = self.permutation.len();
        let ord = match self.kind {
            OrderKind::Lex => self
                .permutation
                .iter()
                .map(|&v| a.exponent(v).cmp(&b.exponent(v)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            OrderKind::Grevlex => grevlex(a, b, &self.permutation),
            OrderKind::BlockLexXThenY => {
                let n = self.n();
                let xs: Vec<usize> = self.permutation.iter().copied().filter(|&v| v <= n).collect();
                let ys: Vec<usize> = self.permutation.iter().copied().filter(|&v| v > n).collect();
                grevlex(a, b, &xs).then_with(|| grevlex(a, b, &ys))
            }
        };
        ord.then_with(|| a.exponents()[xy..].cmp(&b.exponents()[xy..]))
    }
}

fn grevlex(a: &BiMonomial, b: &BiMonomial, vars: &[usize]) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exponent(v)).sum();
    let db: u32 = vars.iter().map(|&v| b.exponent(v)).sum();
    da.cmp(&db).then_with(|| {
        vars.iter()
            .rev()
            .map(|&v| b.exponent(v).cmp(&a.exponent(v)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomials_of_bidegree;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> BiMonomial {
        BiMonomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_makes_xi_yj_lead_for_i_less_than_j() {
        let o = MonomialOrderSpec::lex(1);
        // x1 y2 vs x2 y1
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrderSpec::grevlex(1);
        // degree first
        assert_eq!(o.cmp(&m(&[0, 0, 0, 2]), &m(&[1, 0, 0, 0])), Ordering::Greater);
        // x1*y2 vs x2*y1: last variable y2 present in the first -> smaller
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn parameters_rank_last() {
        let o = MonomialOrderSpec::lex(1);
        // x2 beats d1*y2 (params break ties only)
        assert_eq!(o.cmp(&m(&[0, 1, 0, 0, 0]), &m(&[0, 0, 0, 1, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0, 0, 1]), &m(&[0, 1, 0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn bad_permutations() {
        assert!(MonomialOrderSpec::with_permutation(OrderKind::Lex, vec![0, 1, 2, 2]).is_err());
        assert!(MonomialOrderSpec::with_permutation(OrderKind::Lex, vec![0, 1, 2]).is_err());
    }

    fn kinds() -> impl Strategy<Value = OrderKind> {
        prop_oneof![Just(OrderKind::Lex), Just(OrderKind::Grevlex), Just(OrderKind::BlockLexXThenY)]
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(
            kind in kinds(),
            seed in any::<u64>(),
            a in proptest::collection::vec(0u32..3, 6),
            b in proptest::collection::vec(0u32..3, 6),
            c in proptest::collection::vec(0u32..3, 6),
        ) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let o = MonomialOrderSpec::random(kind, 2, &mut rng);
            let (a, b, c) = (m(&a), m(&b), m(&c));
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(o.cmp(&a, &BiMonomial::one(6)), Ordering::Less);
        }
    }

    #[test]
    fn transitive_on_a_finite_slice() {
        let u = VariableUniverse::new(1);
        let ms: Vec<_> = (0..3).flat_map(|i| monomials_of_bidegree(&u, i, 2 - i)).collect();
        for o in [MonomialOrderSpec::lex(1), MonomialOrderSpec::grevlex(1), MonomialOrderSpec::block(1)] {
            let mut sorted = ms.clone();
            sorted.sort_by(|a, b| o.cmp(a, b));
            for w in sorted.windows(3) {
                assert_eq!(o.cmp(&w[0], &w[2]), Ordering::Less);
            }
        }
    }
}
