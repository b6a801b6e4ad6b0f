//! The space `L_n` of Lie elements: elements `x` of `Q[S_n]` with
//! `A_m(x) = B_m(x)` for every `m = 0..=n`.
//!
//! The defining system is linear in the coefficients of `x` with integer
//! entries, so `L_n` is computed as an exact rational nullspace. Every
//! subspace is stored in reduced row echelon form over the coordinates of
//! [`enumerate_group`](crate::perm::enumerate_group), which makes bases
//! canonical and directly comparable.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::GroupAlgebraElement;
use crate::elim::{integer_rref, to_integer_row, to_rational_row, SparseRow};
use crate::exterior::{defect_matrix, image_terms, OperatorKind, WedgeTable};
use crate::matrix::{nullspace_from_rref, Echelon, RationalMatrix};
use crate::perm::{enumerate_group, Permutation};
use crate::{binomial, check_degree, factorial, Error, Rational, Result, HARD_MAX_DEGREE};

type RatRow = Vec<(usize, Rational)>;

/// A subspace of `Q[S_n]` with its canonical (RREF) basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    degree: usize,
    rows: Vec<RatRow>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(degree: usize) -> Self {
        Subspace {
            degree,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The span of the rows of `m`, whose columns are coordinates of
    /// `Q[S_degree]`.
    pub fn from_matrix(degree: usize, m: &RationalMatrix) -> Result<Self> {
        if m.cols() != factorial(degree) {
            return Err(Error::DegreeMismatch {
                left: factorial(degree),
                right: m.cols(),
            });
        }
        let echelon = m.rref();
        Ok(Self::from_echelon(degree, &echelon))
    }

    fn from_echelon(degree: usize, echelon: &Echelon) -> Self {
        let rows = echelon
            .matrix
            .row_iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        Subspace {
            degree,
            rows,
            pivots: echelon.pivots.clone(),
        }
    }

    pub fn span(degree: usize, elements: &[GroupAlgebraElement]) -> Result<Self> {
        let mut s = Self::zero(degree);
        for x in elements {
            s.insert(x)?;
        }
        Ok(s)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the ambient space, `n!`.
    pub fn ambient_dim(&self) -> usize {
        factorial(self.degree)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The RREF basis as a `dim x n!` matrix.
    pub fn basis(&self) -> RationalMatrix {
        let cols = self.ambient_dim();
        let mut m = RationalMatrix::zeros(self.dim(), cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m.set(i, *c, v.clone());
            }
        }
        m
    }

    pub fn basis_element(&self, i: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(
            self.degree,
            self.rows[i].iter().map(|(c, v)| {
                (
                    Permutation::from_lex_rank(self.degree, *c).expect("coordinate in range"),
                    v.clone(),
                )
            }),
        )
        .expect("coordinates share the subspace degree")
    }

    pub fn basis_elements(&self) -> Vec<GroupAlgebraElement> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    fn check(&self, x: &GroupAlgebraElement) -> Result<()> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.degree(),
            });
        }
        Ok(())
    }

    /// Returns the dense residual of `x` after reduction and the
    /// coordinates used (one per basis row).
    fn reduce(&self, x: &GroupAlgebraElement) -> (Vec<Rational>, Vec<Rational>) {
        let mut acc = x.to_coordinates();
        // Rows vanish on each other's pivots, so every coordinate can be
        // read off before any subtraction touches it.
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| acc[p].clone()).collect();
        for (row, c) in self.rows.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (col, v) in row {
                acc[*col] -= c * v;
            }
        }
        (acc, coords)
    }

    pub fn contains(&self, x: &GroupAlgebraElement) -> Result<bool> {
        self.check(x)?;
        Ok(self.reduce(x).0.iter().all(Zero::is_zero))
    }

    /// Coordinates of `x` in the RREF basis, or `None` if `x` lies outside.
    pub fn coordinates(&self, x: &GroupAlgebraElement) -> Result<Option<Vec<Rational>>> {
        self.check(x)?;
        let (residual, coords) = self.reduce(x);
        Ok(residual.iter().all(Zero::is_zero).then_some(coords))
    }

    /// Adjoins `x`, keeping the basis in RREF. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, x: &GroupAlgebraElement) -> Result<bool> {
        self.check(x)?;
        let (residual, _) = self.reduce(x);
        let Some(pivot) = residual.iter().position(|v| !v.is_zero()) else {
            return Ok(false);
        };
        let lead = residual[pivot].clone();
        let new_row: RatRow = residual
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v / &lead))
            .collect();
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = row[k].1.clone();
                *row = axpy(row, &-factor, &new_row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, new_row);
        Ok(true)
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for x in other.basis_elements() {
            if !self.contains(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `r + a·s` on sparse rows.
fn axpy(r: &RatRow, a: &Rational, s: &RatRow) -> RatRow {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        if j >= s.len() || (i < r.len() && r[i].0 < s[j].0) {
            out.push(r[i].clone());
            i += 1;
        } else if i >= r.len() || s[j].0 < r[i].0 {
            out.push((s[j].0, a * &s[j].1));
            j += 1;
        } else {
            let v = &r[i].1 + a * &s[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Number of rows of the full constraint system, `Σ_m C(n,m)^2 = C(2n,n)`.
pub fn constraint_row_count(n: usize) -> usize {
    (0..=n).map(|m| binomial(n, m).pow(2)).sum()
}

/// Sparse integer rows of `A_m - B_m` for the requested exterior degrees.
///
/// Row `(S_out, S_in)` of block `m` sits at `offset_m + out·C(n,m) + in`
/// and holds, at column `σ`, the coefficient of `x_{S_out}` in
/// `(A_m - B_m)(σ) x_{S_in}`.
fn constraint_rows(n: usize, degrees: &[usize]) -> Result<Vec<SparseRow>> {
    check_degree(n, HARD_MAX_DEGREE)?;
    let group = enumerate_group(n)?;
    let tables = degrees
        .iter()
        .map(|&m| WedgeTable::new(n, m))
        .collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(tables.len());
    let mut total = 0;
    for t in &tables {
        offsets.push(total);
        total += t.basis.len() * t.basis.len();
    }
    let mut rows: Vec<SparseRow> = vec![Vec::new(); total];
    let mut images = Vec::new();
    let mut column: BTreeMap<usize, i64> = BTreeMap::new();
    for (col, sigma) in group.iter().enumerate() {
        for (table, &offset) in tables.iter().zip(&offsets) {
            let size = table.basis.len();
            for (s_in, s) in table.basis.iter().enumerate() {
                column.clear();
                for (kind, weight) in [(OperatorKind::Diagonal, 1), (OperatorKind::Derivation, -1)]
                {
                    image_terms(kind, sigma, s.indices(), table.masks[s_in], &mut images);
                    for &(sign, mask) in &images {
                        *column.entry(table.position[mask]).or_insert(0) += weight * sign as i64;
                    }
                }
                for (&s_out, &v) in &column {
                    if v != 0 {
                        rows[offset + s_out * size + s_in].push((col, v.into()));
                    }
                }
            }
        }
    }
    Ok(rows)
}

/// The full defining system of `L_n` as a dense `C(2n,n) x n!` matrix.
/// `x ∈ L_n` iff its coordinate vector is in the nullspace.
pub fn constraint_matrix(n: usize) -> Result<RationalMatrix> {
    let degrees: Vec<usize> = (0..=n).collect();
    let rows = constraint_rows(n, &degrees)?;
    let cols = factorial(n);
    let mut m = RationalMatrix::zeros(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for (c, v) in row {
            m.set(i, *c, Rational::from_integer(v.clone()));
        }
    }
    Ok(m)
}

/// Solves `A_m(x) = B_m(x)` for the listed exterior degrees only.
pub fn solve_constraints(n: usize, degrees: &[usize]) -> Result<Subspace> {
    if let Some(&m) = degrees.iter().find(|&&m| m > n) {
        return Err(Error::IndexOutOfRange(alloc::format!(
            "exterior degree {m} > {n}"
        )));
    }
    let rows = constraint_rows(n, degrees)?;
    let cols = factorial(n);
    let reduced = integer_rref(rows, cols);
    let echelon = Echelon {
        pivots: reduced.iter().map(|(c, _)| *c).collect(),
        matrix: RationalMatrix::from_rows(
            reduced
                .iter()
                .map(|(_, r)| to_rational_row(r, cols))
                .collect(),
            cols,
        )?,
    };
    let kernel = nullspace_from_rref(&echelon, cols);
    Ok(Subspace::from_echelon(n, &kernel.rref()))
}

/// `L_n` with its canonical basis.
pub fn lie_basis(n: usize) -> Result<Subspace> {
    let degrees: Vec<usize> = (0..=n).collect();
    solve_constraints(n, &degrees)
}

/// Direct test of `A_m(x) = B_m(x)` for every `m`, independent of any
/// nullspace computation.
pub fn is_lie_element(x: &GroupAlgebraElement) -> Result<bool> {
    Ok(first_defect(x)?.is_none())
}

/// The smallest exterior degree on which the two actions of `x` differ.
pub fn first_defect(x: &GroupAlgebraElement) -> Result<Option<usize>> {
    for m in 0..=x.degree() {
        if !defect_matrix(x, m)?.is_zero() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// The Lie subalgebra generated by `generators` and the number of
/// bracketing sweeps needed before it stopped growing.
#[derive(Clone, Debug)]
pub struct Closure {
    pub space: Subspace,
    pub sweeps: usize,
}

/// Smallest bracket-closed subspace containing `generators`.
///
/// Each sweep brackets every generator against the vectors adjoined in the
/// previous sweep; iterated brackets of generators span the generated
/// subalgebra, so the process stops exactly at closure.
pub fn bracket_closure(degree: usize, generators: &[GroupAlgebraElement]) -> Result<Closure> {
    let mut space = Subspace::zero(degree);
    let mut frontier = Vec::new();
    for g in generators {
        if space.insert(g)? {
            frontier.push(g.clone());
        }
    }
    let mut sweeps = 0;
    while !frontier.is_empty() {
        sweeps += 1;
        let mut next = Vec::new();
        for u in &frontier {
            for g in generators {
                let b = g.bracket(u)?;
                if space.insert(&b)? {
                    next.push(b);
                }
            }
        }
        frontier = next;
    }
    Ok(Closure { space, sweeps })
}

/// First pair of basis vectors whose bracket leaves `space`, if any.
pub fn bracket_witness(space: &Subspace) -> Result<Option<(usize, usize)>> {
    let basis = space.basis_elements();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !space.contains(&basis[i].bracket(&basis[j])?)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// First `(permutation, basis index)` whose conjugate leaves `space`.
pub fn conjugation_witness(space: &Subspace) -> Result<Option<(Permutation, usize)>> {
    let basis = space.basis_elements();
    for g in enumerate_group(space.degree())? {
        for (i, u) in basis.iter().enumerate() {
            if !space.contains(&u.conjugate(&g)?)? {
                return Ok(Some((g, i)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub n: usize,
    pub checked: usize,
    /// Indices of basis vectors whose embedding is not a Lie element.
    pub failures: Vec<usize>,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every basis vector of `lie` (a basis of `L_n`) embeds into
/// `L_{n+1}`, using the direct operator test in degree `n+1`.
pub fn verify_embedding_of(lie: &Subspace) -> Result<EmbeddingReport> {
    let n = lie.degree();
    check_degree(n + 1, HARD_MAX_DEGREE)?;
    let mut failures = Vec::new();
    for (i, u) in lie.basis_elements().iter().enumerate() {
        if !is_lie_element(&u.embed())? {
            failures.push(i);
        }
    }
    Ok(EmbeddingReport {
        n,
        checked: lie.dim(),
        failures,
    })
}

pub fn verify_embedding(n: usize) -> Result<EmbeddingReport> {
    check_degree(n + 1, HARD_MAX_DEGREE)?;
    verify_embedding_of(&lie_basis(n)?)
}

/// Scales a coordinate row to primitive integers, for callers that want
/// compact output.
pub fn primitive_integer_coordinates(row: &[Rational]) -> Vec<Rational> {
    let int_row = to_integer_row(row);
    let mut out = vec![Rational::zero(); row.len()];
    for (c, v) in int_row {
        out[c] = Rational::from_integer(v);
    }
    out
}
