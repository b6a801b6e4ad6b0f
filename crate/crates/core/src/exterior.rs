//! The two actions of `Q[S_n]` on the exterior powers of `V = Q^n`.
//!
//! `A_m(g)` applies `g` to every factor of `v_1 ∧ ... ∧ v_m`, `B_m(g)` applies
//! it to one factor at a time and sums over positions. Both are extended
//! linearly to the group algebra. On `V^{∧0} = Q` the conventions are
//! `A_0(g) = 1` and `B_0(g) = 0`.
//!
//! Matrices are written over the wedge basis `x_S = x_{i_1} ∧ ... ∧ x_{i_m}`,
//! `i_1 < ... < i_m`, with subsets in lexicographic order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::GroupAlgebraElement;
use crate::matrix::RationalMatrix;
use crate::perm::Permutation;
use crate::{binomial, Error, Rational, Result};

/// Which of the two operators to realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorKind {
    /// `A_m`: `g(v_1) ∧ ... ∧ g(v_m)`.
    Diagonal,
    /// `B_m`: `Σ_p v_1 ∧ ... ∧ g(v_p) ∧ ... ∧ v_m`.
    Derivation,
}

/// A strictly increasing subset of `{1..n}` naming the basis wedge `x_S`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WedgeIndex {
    n: usize,
    indices: Vec<usize>,
}

impl WedgeIndex {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&i| 1 <= i && i <= n);
        if !increasing || !in_range {
            return Err(Error::IndexOutOfRange(format!(
                "{indices:?} is not an increasing subset of 1..={n}"
            )));
        }
        Ok(WedgeIndex { n, indices })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The exterior degree `m = |S|`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub(crate) fn mask(&self) -> usize {
        self.indices.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
    }
}

/// A sparse combination of basis wedges of a single exterior degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WedgeVector {
    n: usize,
    m: usize,
    terms: BTreeMap<WedgeIndex, Rational>,
}

impl WedgeVector {
    pub fn zero(n: usize, m: usize) -> Self {
        WedgeVector {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &WedgeIndex) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, index: WedgeIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Builds a vector from integer-weighted index lists, e.g.
    /// `[(1, &[2, 3]), (2, &[1, 3])]` for `x_2∧x_3 + 2 x_1∧x_3`.
    pub fn from_terms(n: usize, m: usize, terms: &[(i64, &[usize])]) -> Result<Self> {
        let mut v = Self::zero(n, m);
        for &(c, idx) in terms {
            if idx.len() != m {
                return Err(Error::IndexOutOfRange(format!(
                    "{idx:?} is not an {m}-subset"
                )));
            }
            v.add_term(
                WedgeIndex::new(n, idx.to_vec())?,
                Rational::from_integer(c.into()),
            );
        }
        Ok(v)
    }
}

/// All `C(n, m)` increasing `m`-subsets of `{1..n}` in lexicographic order.
pub fn wedge_basis(n: usize, m: usize) -> Result<Vec<WedgeIndex>> {
    if m > n {
        return Err(Error::IndexOutOfRange(format!("exterior degree {m} > {n}")));
    }
    let mut out = Vec::with_capacity(binomial(n, m));
    let mut current: Vec<usize> = (1..=m).collect();
    loop {
        out.push(WedgeIndex {
            n,
            indices: current.clone(),
        });
        // Advance to the next combination in lex order.
        let Some(k) = (0..m).rev().find(|&k| current[k] < n - (m - 1 - k)) else {
            break;
        };
        current[k] += 1;
        for l in k + 1..m {
            current[l] = current[l - 1] + 1;
        }
    }
    Ok(out)
}

/// Sorts the factors of `x_{raw_1} ∧ ... ∧ x_{raw_m}`. Returns `None` when a
/// factor repeats (the wedge vanishes), otherwise the sign of the sorting
/// permutation and the sorted index.
pub fn sort_with_sign(n: usize, raw: &[usize]) -> Option<(i32, WedgeIndex)> {
    let mut inversions = 0usize;
    for a in 0..raw.len() {
        for b in a + 1..raw.len() {
            match raw[a].cmp(&raw[b]) {
                core::cmp::Ordering::Equal => return None,
                core::cmp::Ordering::Greater => inversions += 1,
                core::cmp::Ordering::Less => {}
            }
        }
    }
    let mut indices = raw.to_vec();
    indices.sort_unstable();
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, WedgeIndex { n, indices }))
}

fn check_degree(sigma: &Permutation, s: &WedgeIndex) -> Result<()> {
    if sigma.degree() != s.n {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: s.n,
        });
    }
    Ok(())
}

/// `A_m(σ) x_S`. For `m = 0` this is the scalar 1.
pub fn apply_a(sigma: &Permutation, s: &WedgeIndex) -> Result<WedgeVector> {
    check_degree(sigma, s)?;
    let mut out = WedgeVector::zero(s.n, s.len());
    let images: Vec<usize> = s.indices.iter().map(|&i| sigma.apply(i)).collect();
    if let Some((sign, index)) = sort_with_sign(s.n, &images) {
        out.add_term(index, Rational::from_integer(sign.into()));
    }
    Ok(out)
}

/// `B_m(σ) x_S`. For `m = 0` this is the zero scalar.
pub fn apply_b(sigma: &Permutation, s: &WedgeIndex) -> Result<WedgeVector> {
    check_degree(sigma, s)?;
    let mut out = WedgeVector::zero(s.n, s.len());
    let mut raw = s.indices.clone();
    for p in 0..raw.len() {
        let original = raw[p];
        raw[p] = sigma.apply(original);
        if let Some((sign, index)) = sort_with_sign(s.n, &raw) {
            out.add_term(index, Rational::from_integer(sign.into()));
        }
        raw[p] = original;
    }
    Ok(out)
}

/// Image terms `(sign, output mask)` of a basis wedge under one permutation.
/// Works on bitmasks to avoid allocation in the hot loops.
pub(crate) fn image_terms(
    kind: OperatorKind,
    sigma: &Permutation,
    indices: &[usize],
    mask: usize,
    out: &mut Vec<(i32, usize)>,
) {
    out.clear();
    match kind {
        OperatorKind::Diagonal => {
            let mut inversions = 0;
            let mut image_mask = 0;
            for (a, &i) in indices.iter().enumerate() {
                let ia = sigma.apply(i);
                image_mask |= 1 << (ia - 1);
                for &j in &indices[a + 1..] {
                    if ia > sigma.apply(j) {
                        inversions += 1;
                    }
                }
            }
            out.push((if inversions % 2 == 0 { 1 } else { -1 }, image_mask));
        }
        OperatorKind::Derivation => {
            for &i in indices {
                let j = sigma.apply(i);
                if j == i {
                    out.push((1, mask));
                    continue;
                }
                if mask & (1 << (j - 1)) != 0 {
                    continue;
                }
                // Moving the factor from slot of i to the slot of j passes
                // over every remaining index strictly between them.
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                let between = mask & ((1 << (hi - 1)) - 1) & !((1 << lo) - 1);
                let sign = if between.count_ones().is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                out.push((sign, (mask & !(1 << (i - 1))) | (1 << (j - 1))));
            }
        }
    }
}

/// Lexicographic basis of `V^{∧m}` together with a mask -> position table.
pub(crate) struct WedgeTable {
    pub basis: Vec<WedgeIndex>,
    pub masks: Vec<usize>,
    pub position: Vec<usize>,
}

impl WedgeTable {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        let basis = wedge_basis(n, m)?;
        let masks: Vec<usize> = basis.iter().map(WedgeIndex::mask).collect();
        let mut position = vec![usize::MAX; 1 << n];
        for (k, &mask) in masks.iter().enumerate() {
            position[mask] = k;
        }
        Ok(WedgeTable {
            basis,
            masks,
            position,
        })
    }
}

/// The `C(n,m) x C(n,m)` matrix of `A_m(x)` or `B_m(x)`; column `S` holds
/// the image of `x_S`.
pub fn operator_matrix(
    x: &GroupAlgebraElement,
    m: usize,
    kind: OperatorKind,
) -> Result<RationalMatrix> {
    let n = x.degree();
    let table = WedgeTable::new(n, m)?;
    let size = table.basis.len();
    let mut out = RationalMatrix::zeros(size, size);
    let mut images = Vec::new();
    for (sigma, coeff) in x.terms() {
        for (col, s) in table.basis.iter().enumerate() {
            image_terms(kind, sigma, &s.indices, table.masks[col], &mut images);
            for &(sign, mask) in &images {
                let row = table.position[mask];
                let entry = out.get_mut(row, col);
                if sign > 0 {
                    *entry += coeff;
                } else {
                    *entry -= coeff;
                }
            }
        }
    }
    Ok(out)
}

/// `A_m(x) - B_m(x)`.
pub fn defect_matrix(x: &GroupAlgebraElement, m: usize) -> Result<RationalMatrix> {
    operator_matrix(x, m, OperatorKind::Diagonal)?.sub(&operator_matrix(
        x,
        m,
        OperatorKind::Derivation,
    )?)
}

/// `A_m(σ)` for a single permutation, a signed permutation matrix.
pub fn permutation_operator(sigma: &Permutation, m: usize) -> Result<RationalMatrix> {
    operator_matrix(
        &GroupAlgebraElement::from_perm(sigma.clone()),
        m,
        OperatorKind::Diagonal,
    )
}
