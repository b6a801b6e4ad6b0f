//! Checkers for two questions about `L_n`: whether it is generated as a Lie
//! algebra by the `ν_ij = 1 - (i j)`, and how large it is modulo the kernel
//! of its action on `Q^n`.
//!
//! Nothing here asserts an expected answer. Every function reports what the
//! exact computation finds.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::algebra::GroupAlgebraElement;
use crate::exterior::{operator_matrix, OperatorKind};
use crate::lie::{bracket_closure, lie_basis, Subspace};
use crate::matrix::RationalMatrix;
use crate::{factorial, Error, Rational, Result};

/// Which module "the action on `Q^n`" refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// `A_1(x)` on the full permutation module, `n x n`.
    Perm,
    /// `A_1(x)` on the sum-zero submodule in the basis `x_i - x_n`.
    Standard,
    /// `A_m(x)` for all `m = 0..=n`, stacked block-diagonally.
    Exterior,
}

impl Interpretation {
    pub const ALL: [Interpretation; 3] = [Self::Perm, Self::Standard, Self::Exterior];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Perm => "perm",
            Self::Standard => "standard",
            Self::Exterior => "exterior",
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Interpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perm" => Ok(Self::Perm),
            "standard" => Ok(Self::Standard),
            "exterior" => Ok(Self::Exterior),
            other => Err(Error::Parse(alloc::format!(
                "unknown interpretation {other:?} (expected perm, standard or exterior)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub n: usize,
    pub closure_dim: usize,
    pub lie_dim: usize,
    pub holds: bool,
    pub sweeps: usize,
    /// Index of the first canonical basis vector of `L_n` outside the
    /// generated subalgebra.
    pub missing: Option<usize>,
}

/// All `ν_ij` for `1 <= i < j <= n`, in lexicographic order of `(i, j)`.
pub fn transposition_generators(n: usize) -> Result<Vec<GroupAlgebraElement>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(GroupAlgebraElement::transposition_unit(i, j, n)?);
        }
    }
    Ok(out)
}

pub fn check_generation(n: usize) -> Result<GenerationReport> {
    check_generation_in(&lie_basis(n)?)
}

/// Same as [`check_generation`] against an already computed `L_n`.
pub fn check_generation_in(lie: &Subspace) -> Result<GenerationReport> {
    let n = lie.degree();
    let closure = bracket_closure(n, &transposition_generators(n)?)?;
    let mut missing = None;
    for (i, u) in lie.basis_elements().iter().enumerate() {
        if !closure.space.contains(u)? {
            missing = Some(i);
            break;
        }
    }
    let closure_dim = closure.space.dim();
    Ok(GenerationReport {
        n,
        closure_dim,
        lie_dim: lie.dim(),
        holds: closure_dim == lie.dim(),
        sweeps: closure.sweeps,
        missing,
    })
}

/// Matrix of `x` acting on the module selected by `interpretation`.
pub fn action_matrix(
    x: &GroupAlgebraElement,
    interpretation: Interpretation,
) -> Result<RationalMatrix> {
    let n = x.degree();
    match interpretation {
        Interpretation::Perm => operator_matrix(x, 1, OperatorKind::Diagonal),
        Interpretation::Standard => {
            // Image of x_j - x_n is column j minus column n; it sums to zero,
            // so its first n-1 entries are its coordinates.
            let full = operator_matrix(x, 1, OperatorKind::Diagonal)?;
            let mut out = RationalMatrix::zeros(n - 1, n - 1);
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    out.set(i, j, full.get(i, j) - full.get(i, n - 1));
                }
            }
            Ok(out)
        }
        Interpretation::Exterior => {
            let blocks = (0..=n)
                .map(|m| operator_matrix(x, m, OperatorKind::Diagonal))
                .collect::<Result<Vec<_>>>()?;
            Ok(RationalMatrix::block_diagonal(&blocks))
        }
    }
}

pub fn action_kernel(n: usize, interpretation: Interpretation) -> Result<Subspace> {
    action_kernel_in(&lie_basis(n)?, interpretation)
}

/// Elements of `lie` acting as zero. Each basis vector's action matrix is
/// flattened into a column; the nullspace of that system gives the kernel
/// in `lie` coordinates, which are then mapped back into `Q[S_n]`.
pub fn action_kernel_in(lie: &Subspace, interpretation: Interpretation) -> Result<Subspace> {
    let n = lie.degree();
    let basis = lie.basis_elements();
    if basis.is_empty() {
        return Ok(Subspace::zero(n));
    }
    let flat: Vec<Vec<Rational>> = basis
        .iter()
        .map(|u| action_matrix(u, interpretation).map(|m| m.entries().to_vec()))
        .collect::<Result<_>>()?;
    let width = flat[0].len();
    let columns = RationalMatrix::from_rows(flat, width)?.transpose();
    let relations = columns.nullspace();
    let mut kernel = Vec::with_capacity(relations.rows());
    for c in relations.row_iter() {
        let mut x = GroupAlgebraElement::zero(n);
        for (coeff, u) in c.iter().zip(&basis) {
            if !coeff.is_zero() {
                x = x.add(&u.scale(coeff))?;
            }
        }
        kernel.push(x);
    }
    Subspace::span(n, &kernel)
}

/// A left-nested repeated commutator
/// `[...[[ν_{1 i_1}, ν_{2 i_2}], ν_{3 i_3}], ..., ν_{n-1, i_{n-1}}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutator {
    /// `(i_1, ..., i_{n-1})` with `s + 1 <= i_s <= n`.
    pub indices: Vec<usize>,
    pub element: GroupAlgebraElement,
}

/// All `(n-1)!` repeated commutators in lexicographic order of their index
/// tuples. Empty for `n = 1`, and just `ν_12` for `n = 2`.
pub fn commutator_family(n: usize) -> Result<Vec<Commutator>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(factorial(n - 1));
    let mut indices: Vec<usize> = (2..=n).collect();
    loop {
        let mut x = GroupAlgebraElement::transposition_unit(1, indices[0], n)?;
        for (s, &i) in indices.iter().enumerate().skip(1) {
            x = x.bracket(&GroupAlgebraElement::transposition_unit(s + 1, i, n)?)?;
        }
        out.push(Commutator {
            indices: indices.clone(),
            element: x,
        });
        // Odometer over the ranges s+1..=n, last position fastest.
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if indices[pos] < n {
                indices[pos] += 1;
                for (s, slot) in indices.iter_mut().enumerate().skip(pos + 1) {
                    *slot = s + 2;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub n: usize,
    pub interpretation: Interpretation,
    pub lie_dim: usize,
    pub kernel_dim: usize,
    pub quotient_dim: usize,
    pub predicted: usize,
    pub matches: bool,
    pub commutator_count: usize,
    pub commutator_rank_mod_kernel: usize,
    pub commutators_form_basis: bool,
    /// Index tuple of the first commutator that is dependent on the earlier
    /// ones modulo the kernel.
    pub dependent_commutator: Option<Vec<usize>>,
}

impl QuotientReport {
    /// Whether every reported comparison came out equal.
    pub fn consistent_with_prediction(&self) -> bool {
        self.matches && self.commutators_form_basis
    }
}

pub fn quotient_report(n: usize, interpretation: Interpretation) -> Result<QuotientReport> {
    quotient_report_in(&lie_basis(n)?, interpretation)
}

pub fn quotient_report_in(
    lie: &Subspace,
    interpretation: Interpretation,
) -> Result<QuotientReport> {
    let n = lie.degree();
    let kernel = action_kernel_in(lie, interpretation)?;
    let family = commutator_family(n)?;
    let mut span = kernel.clone();
    let mut rank = 0;
    let mut dependent = None;
    for c in &family {
        if span.insert(&c.element)? {
            rank += 1;
        } else if dependent.is_none() {
            dependent = Some(c.indices.clone());
        }
    }
    let quotient_dim = lie.dim() - kernel.dim();
    let predicted = factorial(n - 1);
    Ok(QuotientReport {
        n,
        interpretation,
        lie_dim: lie.dim(),
        kernel_dim: kernel.dim(),
        quotient_dim,
        predicted,
        matches: quotient_dim == predicted,
        commutator_count: family.len(),
        commutator_rank_mod_kernel: rank,
        commutators_form_basis: rank == quotient_dim && rank == family.len(),
        dependent_commutator: dependent,
    })
}
