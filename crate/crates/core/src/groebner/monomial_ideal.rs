use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polyring::{BiMonomial, VariableUniverse};

/// A monomial ideal held by its minimal generators, sorted decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<BiMonomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = BiMonomial>) -> Self {
        let all: BTreeSet<BiMonomial> = gens.into_iter().collect();
        let all: Vec<BiMonomial> = all.into_iter().collect();
        let mut gens: Vec<BiMonomial> = all
            .iter()
            .filter(|m| !all.iter().any(|d| d != *m && d.divides(m)))
            .cloned()
            .collect();
        gens.reverse();
        Self { nvars, gens }
    }

    /// The prime `⟨vars⟩`.
    pub fn generated_by_vars(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&v| BiMonomial::var(nvars, v)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[BiMonomial] {
        &self.gens
    }

    pub fn contains(&self, m: &BiMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Generated by the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Self {
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Self::new(self.nvars, lcms)
    }

    fn supports(&self) -> Vec<u64> {
        assert!(self.nvars <= 64, "at most 64 variables supported");
        self.gens
            .iter()
            .map(|g| g.support().fold(0u64, |acc, v| acc | (1 << v)))
            .collect()
    }

    /// Krull dimension of `k[vars]/M`: the largest set of variables that
    /// contains the support of no generator, found as `nvars` minus a
    /// minimum hitting set of the generator supports.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        fn search(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
            if size >= *best {
                return;
            }
            match sets.iter().find(|&&s| s & chosen == 0) {
                None => *best = size,
                Some(&s) => {
                    let mut rest = s;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        rest &= rest - 1;
                        search(sets, chosen | (1 << v), size + 1, best);
                    }
                }
            }
        }
        let sets = self.supports();
        let mut best = self.nvars + 1;
        search(&sets, 0, 0, &mut best);
        Ok(self.nvars - best)
    }

    /// Minimal primes, each as a sorted list of variable indices (the
    /// minimal vertex covers of the generator supports). For squarefree
    /// ideals these are all the associated primes.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        fn search(sets: &[u64], chosen: u64, out: &mut BTreeSet<u64>) {
            match sets.iter().find(|&&s| s & chosen == 0) {
                None => {
                    out.insert(chosen);
                }
                Some(&s) => {
                    let mut rest = s;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        rest &= rest - 1;
                        search(sets, chosen | (1 << v), out);
                    }
                }
            }
        }
        let sets = self.supports();
        let mut covers = BTreeSet::new();
        search(&sets, 0, &mut covers);
        let covers: Vec<u64> = covers.into_iter().collect();
        let mut minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&d| d != c && d & c == d))
            .map(|&c| (0..64).filter(|v| c & (1 << v) != 0).collect())
            .collect();
        minimal.sort();
        minimal
    }

    pub fn render(&self, universe: &VariableUniverse) -> Vec<String> {
        self.gens.iter().map(|g| g.render(universe)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> BiMonomial {
        BiMonomial::from_exponents(e.to_vec())
    }

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[1, 0, 0]), m(&[1, 0, 0]), m(&[0, 0, 2])]);
        assert_eq!(i.gens(), [m(&[1, 0, 0]), m(&[0, 0, 2])]);
        assert!(i.contains(&m(&[2, 5, 0])));
        assert!(!i.contains(&m(&[0, 5, 1])));
    }

    #[test]
    fn intersection_of_two_primes() {
        // <x1> ∩ <y2> = <x1 y2> in k[x1,x2,y1,y2]
        let a = MonomialIdeal::generated_by_vars(4, &[0]);
        let b = MonomialIdeal::generated_by_vars(4, &[3]);
        assert_eq!(a.intersect(&b), MonomialIdeal::new(4, [m(&[1, 0, 0, 1])]));
    }

    #[test]
    fn dimension_examples() {
        // <x1, x2> in 4 variables
        assert_eq!(MonomialIdeal::generated_by_vars(4, &[0, 1]).dimension().unwrap(), 2);
        assert_eq!(MonomialIdeal::new(4, []).dimension().unwrap(), 4);
        assert!(matches!(MonomialIdeal::new(4, [m(&[0, 0, 0, 0])]).dimension(), Err(Error::UnitIdeal)));
    }

    #[test]
    fn primes_of_x1y2() {
        let i = MonomialIdeal::new(4, [m(&[1, 0, 0, 1])]);
        assert_eq!(i.minimal_primes(), vec![vec![0], vec![3]]);
    }

    /// Brute force over every variable subset.
    fn dimension_oracle(i: &MonomialIdeal) -> usize {
        let n = i.nvars();
        (0u32..1 << n)
            .filter(|&s| i.gens().iter().all(|g| g.support().any(|v| s & (1 << v) == 0)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    proptest! {
        #[test]
        fn dimension_matches_subset_enumeration(
            nv in 1usize..=8,
            raw in proptest::collection::vec(proptest::collection::vec(0u32..3, 8), 1..6),
        ) {
            let gens: Vec<_> = raw.into_iter().map(|e| m(&e[..nv])).filter(|g| !g.is_one()).collect();
            let i = MonomialIdeal::new(nv, gens);
            prop_assert_eq!(i.dimension().unwrap(), dimension_oracle(&i));
            // minimal primes have size nvars - dim at minimum
            let smallest = i.minimal_primes().iter().map(|p| p.len()).min().unwrap();
            prop_assert_eq!(nv - smallest, dimension_oracle(&i));
        }
    }
}
