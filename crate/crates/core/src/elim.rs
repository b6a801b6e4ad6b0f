//! Fraction-free Gauss-Jordan elimination on sparse integer rows.
//!
//! Rows are kept primitive (content 1) after every update, which keeps the
//! integers small on the very sparse, small-entry systems this crate builds.
//! Converting to rationals happens once at the end.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Sorted `(column, nonzero value)` pairs.
pub(crate) type SparseRow = Vec<(usize, BigInt)>;

fn entry(row: &SparseRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·r - b·s` merged column-wise, dropping cancellations.
fn combine(a: &BigInt, r: &SparseRow, b: &BigInt, s: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let take_r = j >= s.len() || (i < r.len() && r[i].0 < s[j].0);
        let take_s = i >= r.len() || (j < s.len() && s[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if take_s {
            out.push((s[j].0, -(b * &s[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &s[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn eliminate(row: &SparseRow, pivot_row: &SparseRow, pivot: &BigInt, value: &BigInt) -> SparseRow {
    let g = pivot.gcd(value);
    let mut out = combine(&(pivot / &g), row, &(value / &g), pivot_row);
    make_primitive(&mut out);
    out
}

/// Integer rows spanning the same space, in reduced echelon shape: pivots
/// strictly increasing, each pivot positive, pivot columns cleared in every
/// other row, each row primitive.
pub(crate) fn integer_rref(rows: Vec<SparseRow>, ncols: usize) -> Vec<(usize, SparseRow)> {
    let mut active: Vec<SparseRow> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|mut r| {
            make_primitive(&mut r);
            if r[0].1.is_negative() {
                r.iter_mut().for_each(|(_, v)| *v = -&*v);
            }
            r
        })
        .collect();
    active.sort();
    active.dedup();

    let mut done: Vec<(usize, SparseRow)> = Vec::new();
    for col in 0..ncols {
        if active.is_empty() {
            break;
        }
        // Active rows are zero left of `col`, so a candidate leads with it.
        let chosen = active
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(k, r)| (r.len(), *k))
            .map(|(k, _)| k);
        let Some(k) = chosen else { continue };
        let mut pivot_row = active.remove(k);
        if pivot_row[0].1.is_negative() {
            pivot_row.iter_mut().for_each(|(_, v)| *v = -&*v);
        }
        let pivot = pivot_row[0].1.clone();

        for row in active.iter_mut() {
            if row[0].0 == col {
                let value = row[0].1.clone();
                *row = eliminate(row, &pivot_row, &pivot, &value);
            }
        }
        active.retain(|r| !r.is_empty());
        for (_, row) in done.iter_mut() {
            if let Some(value) = entry(row, col).cloned() {
                *row = eliminate(row, &pivot_row, &pivot, &value);
                // Earlier pivots may have picked up a factor; keep them positive.
                if row[0].1.is_negative() {
                    row.iter_mut().for_each(|(_, v)| *v = -&*v);
                }
            }
        }
        done.push((col, pivot_row));
    }
    done
}

/// Scales a rational row to a primitive integer row.
pub(crate) fn to_integer_row(values: &[Rational]) -> SparseRow {
    let mut lcm = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        lcm = lcm.lcm(v.denom());
    }
    let mut row: SparseRow = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

/// Divides an echelon row by its pivot and densifies it.
pub(crate) fn to_rational_row(row: &SparseRow, ncols: usize) -> Vec<Rational> {
    let pivot = &row[0].1;
    let mut out = alloc::vec![Rational::zero(); ncols];
    for (c, v) in row {
        out[*c] = Rational::new(v.clone(), pivot.clone());
    }
    out
}
