use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use super::order::MonomialOrderSpec;
use super::sorted::{reduce, s_polynomial, SortedPoly};
use crate::error::{Error, Result};
use crate::polyring::{BiPolynomial, VariableUniverse};

fn common_universe(polys: &[BiPolynomial]) -> Result<Option<Arc<VariableUniverse>>> {
    let Some(first) = polys.first() else { return Ok(None) };
    let u = first.universe().clone();
    for p in &polys[1..] {
        if **p.universe() != *u {
            return Err(Error::UniverseMismatch);
        }
    }
    Ok(Some(u))
}

fn sorted_nonzero(polys: &[BiPolynomial], order: &MonomialOrderSpec) -> Vec<SortedPoly> {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| SortedPoly::from_poly(p, order))
        .collect()
}

/// Remainder of `f` modulo `basis`: no term of the result is divisible by a
/// leading monomial of `basis`, and `f − r ∈ ⟨basis⟩`.
pub fn normal_form(f: &BiPolynomial, basis: &[BiPolynomial], order: &MonomialOrderSpec) -> Result<BiPolynomial> {
    for g in basis {
        if **g.universe() != **f.universe() {
            return Err(Error::UniverseMismatch);
        }
    }
    let g = sorted_nonzero(basis, order);
    let (r, _) = reduce(&SortedPoly::from_poly(f, order), &g, order);
    Ok(r.to_poly(f.universe()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PairOutcome {
    /// Leading monomials coprime.
    Criterion1,
    /// Chain criterion via a third element.
    Criterion2 { via: usize },
    /// Reduced in `steps` steps; nonzero remainders were appended as basis
    /// element `added`.
    Reduced { steps: usize, added: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    #[serde(flatten)]
    pub outcome: PairOutcome,
}

/// A reduced Gröbner basis with the S-pair log of its computation.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: MonomialOrderSpec,
    /// Sorted by decreasing leading monomial.
    pub basis: Vec<BiPolynomial>,
    pub log: Vec<PairRecord>,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.num_terms() == 1 && g.terms().next().unwrap().0.is_one())
    }

    pub fn leading_monomials(&self) -> Vec<crate::polyring::BiMonomial> {
        self.basis
            .iter()
            .map(|g| SortedPoly::from_poly(g, &self.order).lm().clone())
            .collect()
    }

    pub fn reduce(&self, f: &BiPolynomial) -> Result<BiPolynomial> {
        normal_form(f, &self.basis, &self.order)
    }

    /// JSON certificate: order, generators, reduced basis and the S-pair
    /// reduction log.
    pub fn certificate_json(&self, generators: &[BiPolynomial]) -> serde_json::Value {
        json!({
            "order": self.order,
            "generators": generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "reduced_basis": self.basis.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "s_pairs": self.log,
        })
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: crate::polyring::BiMonomial,
}

/// Buchberger's algorithm with the product and chain criteria and normal
/// selection (smallest lcm first, ties broken by `(i, j)`).
pub fn buchberger(gens: &[BiPolynomial], order: &MonomialOrderSpec) -> Result<GroebnerBasis> {
    let Some(universe) = common_universe(gens)? else {
        return Ok(GroebnerBasis { order: order.clone(), basis: Vec::new(), log: Vec::new() });
    };
    if !order.fits(&universe) {
        return Err(Error::InvalidInput(format!("order {} does not fit n = {}", order.label(), universe.n())));
    }
    let mut basis = sorted_nonzero(gens, order);
    for g in &mut basis {
        g.make_monic();
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: basis[i].lm().lcm(basis[j].lm()) });
            pending.insert((i, j));
        }
    }

    let mut log = Vec::new();
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(pick);
        pending.remove(&(i, j));

        if basis[i].lm().is_coprime(basis[j].lm()) {
            log.push(PairRecord { i, j, outcome: PairOutcome::Criterion1 });
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).find(|&l| {
            l != i
                && l != j
                && basis[l].lm().divides(&lcm)
                && !pending.contains(&key(i, l))
                && !pending.contains(&key(j, l))
        });
        if let Some(via) = chain {
            log.push(PairRecord { i, j, outcome: PairOutcome::Criterion2 { via } });
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let (mut r, steps) = reduce(&s, &basis, order);
        let added = if r.is_zero() {
            None
        } else {
            r.make_monic();
            let k = basis.len();
            for l in 0..k {
                pairs.push(Pair { i: l, j: k, lcm: basis[l].lm().lcm(r.lm()) });
                pending.insert((l, k));
            }
            basis.push(r);
            Some(k)
        };
        log.push(PairRecord { i, j, outcome: PairOutcome::Reduced { steps, added } });
    }

    let reduced = interreduce(basis, order);
    Ok(GroebnerBasis {
        order: order.clone(),
        basis: reduced.iter().map(|g| g.to_poly(&universe)).collect(),
        log,
    })
}

/// Minimal, monic, tail-reduced basis sorted by decreasing leading monomial.
fn interreduce(basis: Vec<SortedPoly>, order: &MonomialOrderSpec) -> Vec<SortedPoly> {
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && basis[j].lm().divides(basis[i].lm())
                    && (basis[j].lm() != basis[i].lm() || j < i)
            })
        })
        .collect();
    let minimal: Vec<SortedPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut out: Vec<SortedPoly> = minimal
        .iter()
        .map(|g| {
            let lead = g.terms.last().cloned().expect("nonzero");
            let tail = SortedPoly { terms: g.terms[..g.terms.len() - 1].to_vec() };
            let (mut r, _) = reduce(&tail, &minimal, order);
            r.terms.push(lead);
            r.make_monic();
            r
        })
        .collect();
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub steps: usize,
    pub reduces_to_zero: bool,
}

/// Result of checking every S-pair of a candidate basis.
#[derive(Debug, Clone, Serialize)]
pub struct GroebnerCertificate {
    pub order: MonomialOrderSpec,
    pub holds: bool,
    pub pairs: Vec<PairCheck>,
}

/// True iff every S-polynomial of `g` reduces to zero modulo `g`. No pair is
/// skipped; the certificate lists all `C(|g|, 2)` pairs.
pub fn is_groebner_basis(g: &[BiPolynomial], order: &MonomialOrderSpec) -> Result<GroebnerCertificate> {
    common_universe(g)?;
    if g.iter().any(|p| p.is_zero()) {
        return Err(Error::InvalidInput("zero element in candidate basis".into()));
    }
    let sorted = sorted_nonzero(g, order);
    let mut pairs = Vec::new();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let s = s_polynomial(&sorted[i], &sorted[j], order);
            let (r, steps) = reduce(&s, &sorted, order);
            pairs.push(PairCheck { i, j, steps, reduces_to_zero: r.is_zero() });
        }
    }
    Ok(GroebnerCertificate {
        order: order.clone(),
        holds: pairs.iter().all(|p| p.reduces_to_zero),
        pairs,
    })
}
