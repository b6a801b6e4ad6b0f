//! Exact computation of Lie elements in the rational group algebra of the
//! symmetric group.
//!
//! An element `x` of `Q[S_n]` acts on every exterior power of the
//! permutation representation `Q^n` in two ways: diagonally (`A_m`, apply
//! each permutation to every wedge factor) and as a derivation (`B_m`,
//! apply it to one factor at a time and sum). Elements on which both
//! actions agree for all `m = 0..=n` form a Lie subalgebra `L_n` that is
//! stable under conjugation. This crate computes `L_n` by exact nullspace,
//! decomposes it into irreducible representations, and probes questions
//! about its generators and its action on `Q^n`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod conjecture;
mod elim;
mod error;
pub mod exterior;
pub mod lie;
pub mod matrix;
pub mod perm;
pub mod rep;

pub use algebra::GroupAlgebraElement;
pub use error::{Error, Result};
pub use exterior::{OperatorKind, WedgeIndex, WedgeVector};
pub use lie::Subspace;
pub use matrix::RationalMatrix;
pub use perm::{Partition, Permutation};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Largest degree any whole-group computation will accept.
///
/// At `n = 7` the constraint system is 3432 x 5040; beyond that the dense
/// exact approach is out of reach.
pub const HARD_MAX_DEGREE: usize = 7;

/// Default degree limit for front ends; raising it to
/// [`HARD_MAX_DEGREE`] is allowed but slow.
pub const DEFAULT_MAX_DEGREE: usize = 6;

pub(crate) fn check_degree(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::ResourceGuard { n, max });
    }
    Ok(())
}

/// `n!` as a machine integer.
pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
