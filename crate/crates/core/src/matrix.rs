//! Dense matrices over `Q` with exact reduced row echelon form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::elim::{integer_rref, to_integer_row, to_rational_row};
use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from equally long rows. `cols` is needed to
    /// describe a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::IndexOutOfRange(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::IndexOutOfRange(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::IndexOutOfRange(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.mul(b)?.sub(&b.mul(a)?)
    }

    /// Square blocks placed along the diagonal.
    pub fn block_diagonal(blocks: &[RationalMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Canonical reduced row echelon form of the row space; zero rows are
    /// dropped, so the result has `rank` rows.
    pub fn rref(&self) -> Echelon {
        let rows = self.row_iter().map(to_integer_row).collect();
        let reduced = integer_rref(rows, self.cols);
        let pivots = reduced.iter().map(|(c, _)| *c).collect();
        let mut data = Vec::with_capacity(reduced.len() * self.cols);
        for (_, row) in &reduced {
            data.extend(to_rational_row(row, self.cols));
        }
        Echelon {
            matrix: RationalMatrix {
                rows: reduced.len(),
                cols: self.cols,
                data,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{ v : M v = 0 }` as the rows of a matrix in reduced row
    /// echelon form.
    pub fn nullspace(&self) -> RationalMatrix {
        let echelon = self.rref();
        nullspace_from_rref(&echelon, self.cols)
    }

    /// Whether the matrix is already in reduced row echelon form with no
    /// zero rows.
    pub fn is_rref(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut pivots = Vec::with_capacity(self.rows);
        for row in self.row_iter() {
            let Some(p) = row.iter().position(|v| !v.is_zero()) else {
                return false;
            };
            if !row[p].is_one() || last.is_some_and(|l| p <= l) {
                return false;
            }
            last = Some(p);
            pivots.push(p);
        }
        pivots
            .iter()
            .enumerate()
            .all(|(i, &p)| (0..self.rows).all(|k| k == i || self.get(k, p).is_zero()))
    }
}

pub(crate) fn nullspace_from_rref(echelon: &Echelon, cols: usize) -> RationalMatrix {
    let mut is_pivot = vec![false; cols];
    for &p in &echelon.pivots {
        is_pivot[p] = true;
    }
    let generators: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in echelon.pivots.iter().enumerate() {
                v[p] = -echelon.matrix.get(i, f).clone();
            }
            v
        })
        .collect();
    let count = generators.len();
    // Free-column generators are independent but not yet in canonical form.
    RationalMatrix::from_rows(generators, cols)
        .map(|m| m.rref().matrix)
        .unwrap_or_else(|_| RationalMatrix::zeros(count, cols))
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            f.write_str("  ")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}
