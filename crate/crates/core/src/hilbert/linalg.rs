//! Fraction-free sparse Gaussian elimination over ℤ.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Sparse row: `(column, entry)` sorted by column, no zero entries.
pub(crate) type SparseRow = Vec<(usize, BigInt)>;

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a*row − b*pivot` with a sorted merge.
fn combine(row: &SparseRow, a: &BigInt, pivot: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, a * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of an integer matrix given as sparse rows.
pub(crate) fn rank_fraction_free(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        make_primitive(&mut row);
        while let Some((col, lead)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(p) => {
                    let plead = &p[0].1;
                    let g = plead.gcd(&lead);
                    row = combine(&row, &(plead / &g), p, &(&lead / &g));
                    make_primitive(&mut row);
                }
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Scales a rational row to a primitive integer row.
pub(crate) fn integer_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let entries: Vec<(usize, Rational)> = entries.into_iter().collect();
    let l = entries.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut row: SparseRow = entries
        .into_iter()
        .map(|(c, v)| (c, (v * Rational::from_integer(l.clone())).to_integer()))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

/// Exact rank over ℚ of a matrix with rational entries given as sparse rows
/// (`(column, value)` pairs, any order, distinct columns).
pub fn exact_rank(rows: &[Vec<(usize, Rational)>]) -> usize {
    rank_fraction_free(rows.iter().map(|r| integer_row(r.iter().cloned())))
}
