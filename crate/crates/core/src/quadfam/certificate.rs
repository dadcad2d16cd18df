use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::family::{evaluate_family_at, family_ideal_j};
use super::matrix::ChartPoint;
use crate::error::{Error, Result};
use crate::hilbert::{chi_graph, interpolate_hilbert_polynomial, tabulate, HilbertMethod, HilbertPolynomialQ};

/// A deliberate defect in the family, used as a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    /// Remove generator `k` (one-based) of the family ideal.
    DropGenerator(usize),
}

impl FromStr for Corruption {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown corruption `{s}`; expected drop-generator:K"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "drop-generator" => {
                let k: usize = arg.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(Error::InvalidInput("generators are numbered from 1".into()));
                }
                Ok(Self::DropGenerator(k))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DropGenerator(k) => write!(f, "drop-generator:{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub index: usize,
    pub point: ChartPoint,
    pub nondegenerate: bool,
    pub projective_dimension: i64,
    pub hilbert_function: Vec<(u32, u64)>,
    pub hilbert_polynomial: HilbertPolynomialQ,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlatnessCertificate {
    pub n: usize,
    pub t_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corruption: Option<String>,
    pub expected: HilbertPolynomialQ,
    pub fibers: Vec<FiberReport>,
    pub divergent_fibers: Vec<usize>,
    pub verdict: Verdict,
}

/// `(I, 0)`, `(I, 1)`, one random point with all `d_i != 0`, and one random
/// point with `d_n = 0`.
pub fn standard_points(n: usize, seed: u64) -> Vec<ChartPoint> {
    if n == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_zero = vec![false; n];
    last_zero[n - 1] = true;
    vec![
        ChartPoint::origin(n),
        ChartPoint::identity_quadric(n),
        ChartPoint::random(n, &vec![false; n], &mut rng),
        ChartPoint::random(n, &last_zero, &mut rng),
    ]
}

/// Seeded random points: `nondegenerate` with every `d_i != 0`, then
/// `degenerate` with a random nonempty set of `d_i` equal to zero. Points are
/// pairwise distinct and distinct from `(I, 0)` and `(I, 1)`; repeats are
/// redrawn.
pub fn sampled_points(n: usize, nondegenerate: usize, degenerate: usize, seed: u64) -> Vec<ChartPoint> {
    if n == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = vec![ChartPoint::origin(n), ChartPoint::identity_quadric(n)];
    let mut out = Vec::with_capacity(nondegenerate + degenerate);
    while out.len() < nondegenerate + degenerate {
        let mask: Vec<bool> = if out.len() < nondegenerate {
            vec![false; n]
        } else {
            let mut mask: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            if !mask.iter().any(|&b| b) {
                let k = rng.gen_range(0..n);
                mask[k] = true;
            }
            mask
        };
        let p = ChartPoint::random(n, &mask, &mut rng);
        if !seen.contains(&p) {
            seen.push(p.clone());
            out.push(p);
        }
    }
    out
}

/// Computes the diagonal Hilbert polynomial of the fiber of the family over
/// each point and compares it with that of a smooth quadric's Gauss graph.
/// `(I, 0)` and `(I, 1)` are always included, first.
pub fn flatness_certificate(
    n: usize,
    points: &[ChartPoint],
    t_max: u32,
    corruption: Option<Corruption>,
) -> Result<FlatnessCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if let Some(p) = points.iter().find(|p| p.n() != n) {
        return Err(Error::InvalidChartPoint(format!("point has n = {}, expected {n}", p.n())));
    }
    let mut all = vec![ChartPoint::origin(n), ChartPoint::identity_quadric(n)];
    for p in points {
        if !all.contains(p) {
            all.push(p.clone());
        }
    }

    let mut family = family_ideal_j(n);
    if let Some(Corruption::DropGenerator(k)) = corruption {
        family = family.without_generator(k - 1)?;
    }
    let expected = chi_graph(n);

    let fibers = all
        .par_iter()
        .enumerate()
        .map(|(index, p)| {
            let fiber = evaluate_family_at(&family, p)?;
            let dim = fiber.projective_dimension()?;
            let dim_bound = dim.max(0) as usize;
            let top = t_max.max(2 * dim_bound as u32 + 4);
            let table = tabulate(&fiber, 1..=top, HilbertMethod::InitialIdealCount)?;
            let poly = interpolate_hilbert_polynomial(&table, dim_bound)?;
            Ok(FiberReport {
                index,
                point: p.clone(),
                nondegenerate: p.is_nondegenerate(),
                projective_dimension: dim,
                hilbert_function: table.values.iter().map(|(&t, &v)| (t, v)).collect(),
                matches: poly == expected,
                hilbert_polynomial: poly,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let divergent_fibers: Vec<usize> = fibers.iter().filter(|f| !f.matches).map(|f| f.index).collect();
    Ok(FlatnessCertificate {
        n,
        t_max,
        corruption: corruption.map(|c| c.to_string()),
        expected,
        verdict: if divergent_fibers.is_empty() { Verdict::Pass } else { Verdict::Fail },
        divergent_fibers,
        fibers,
    })
}
