//! Sparse elements of the rational group algebra `Q[S_n]`.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::perm::Permutation;
use crate::{factorial, Error, Rational, Result};

/// `x = Σ a_σ σ` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality. Terms iterate in lexicographic order of the permutations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 = identity permutation`.
    pub fn one(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Self::monomial(perm, Rational::one())
    }

    pub fn monomial(perm: Permutation, coeff: Rational) -> Self {
        let mut x = Self::zero(perm.degree());
        x.add_term(perm, coeff);
        x
    }

    /// Sums the given terms; repeated permutations accumulate.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut x = Self::zero(degree);
        for (perm, coeff) in terms {
            check(degree, perm.degree())?;
            x.add_term(perm, coeff);
        }
        Ok(x)
    }

    /// Integer-coefficient shorthand, mainly for fixtures:
    /// `from_cycle_terms(4, &[(1, "(1 2 3 4)"), (-1, "(1 2 4 3)")])`.
    pub fn from_cycle_terms(degree: usize, terms: &[(i64, &str)]) -> Result<Self> {
        let mut x = Self::zero(degree);
        for &(c, text) in terms {
            x.add_term(
                Permutation::parse_cycles(text, degree)?,
                Rational::from_integer(c.into()),
            );
        }
        Ok(x)
    }

    /// Builds an element from its coordinate vector over the lexicographic
    /// enumeration of `S_n`.
    pub fn from_coordinates(degree: usize, coords: &[Rational]) -> Result<Self> {
        if coords.len() != factorial(degree) {
            return Err(Error::IndexOutOfRange(format!(
                "{} coordinates for S_{degree}",
                coords.len()
            )));
        }
        let mut x = Self::zero(degree);
        for (rank, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                x.terms
                    .insert(Permutation::from_lex_rank(degree, rank)?, c.clone());
            }
        }
        Ok(x)
    }

    /// Dense coordinates over the lexicographic enumeration of `S_n`.
    pub fn to_coordinates(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); factorial(self.degree)];
        for (perm, c) in &self.terms {
            out[perm.lex_rank()] = c.clone();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    /// Number of permutations with a nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, perm: &Permutation) -> Rational {
        self.terms.get(perm).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, perm: Permutation, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(perm) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    /// `c1·x + c2·y`.
    pub fn linear_combine(c1: &Rational, x: &Self, c2: &Rational, y: &Self) -> Result<Self> {
        check(x.degree, y.degree)?;
        let mut out = x.scale(c1);
        if !c2.is_zero() {
            for (p, b) in &y.terms {
                out.add_term(p.clone(), b * c2);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(&Rational::one(), self, &Rational::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(&Rational::one(), self, &-Rational::one(), other)
    }

    /// Convolution product: the coefficient of `r` is `Σ_{p∘q = r} a_p b_q`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check(self.degree, other.degree)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose_unchecked(q), a * b);
            }
        }
        Ok(out)
    }

    /// Commutator `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        check(self.degree, other.degree)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let ab = a * b;
                out.add_term(p.compose_unchecked(q), ab.clone());
                out.add_term(q.compose_unchecked(p), -ab);
            }
        }
        Ok(out)
    }

    /// `g x g^{-1}`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Self> {
        check(g.degree(), self.degree)?;
        let g_inv = g.inverse();
        Ok(GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, a)| (g.compose_unchecked(s).compose_unchecked(&g_inv), a.clone()))
                .collect(),
        })
    }

    /// `ν_ij = 1 - (i j)` for `1 <= i < j <= n`.
    pub fn transposition_unit(i: usize, j: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "need 1 <= i < j <= n, got i = {i}, j = {j}, n = {n}"
            )));
        }
        let mut x = Self::one(n);
        x.add_term(Permutation::transposition(i, j, n)?, -Rational::one());
        Ok(x)
    }

    /// Image under the embedding `Q[S_n] -> Q[S_{n+1}]`.
    pub fn embed(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree + 1,
            terms: self
                .terms
                .iter()
                .map(|(p, a)| (p.embed(), a.clone()))
                .collect(),
        }
    }

    /// `Σ a_σ`, which is the scalar by which `x` acts on the zeroth
    /// exterior power.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

fn check(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (perm, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{perm}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[S_{}] {}", self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, terms: &[(i64, &str)]) -> GroupAlgebraElement {
        GroupAlgebraElement::from_cycle_terms(n, terms).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn nu(i: usize, j: usize, n: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::transposition_unit(i, j, n).unwrap()
    }

    #[test]
    fn linear_combine_examples() {
        let x = el(3, &[(2, "(1 2)"), (-3, "(1 2 3)")]);
        assert!(GroupAlgebraElement::linear_combine(&q(1), &x, &q(-1), &x)
            .unwrap()
            .is_zero());
        let e = GroupAlgebraElement::one(2);
        let t = el(2, &[(1, "(1 2)")]);
        assert_eq!(
            GroupAlgebraElement::linear_combine(&q(1), &e, &q(-1), &t).unwrap(),
            nu(1, 2, 2)
        );
        assert_eq!(
            GroupAlgebraElement::linear_combine(&q(2), &e, &q(3), &e).unwrap(),
            GroupAlgebraElement::one(2).scale(&q(5))
        );
        assert!(matches!(
            GroupAlgebraElement::linear_combine(&q(1), &e, &q(1), &x),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        // (1 - t)(1 - t) = 1 - 2t + t^2 = 2 - 2t, expanded by hand.
        let v = nu(1, 2, 3);
        assert_eq!(v.multiply(&v).unwrap(), v.scale(&q(2)));
        let x = el(3, &[(2, "(1 2)"), (-1, "(1 3 2)")]);
        assert_eq!(x.multiply(&GroupAlgebraElement::one(3)).unwrap(), x);
        assert_eq!(
            el(3, &[(1, "(1 2)")])
                .multiply(&el(3, &[(1, "(2 3)")]))
                .unwrap(),
            el(3, &[(1, "(1 2 3)")])
        );
    }

    #[test]
    fn bracket_named_identities() {
        assert_eq!(
            nu(1, 2, 3).bracket(&nu(2, 3, 3)).unwrap(),
            el(3, &[(1, "(1 2 3)"), (-1, "(1 3 2)")])
        );
        let c = el(4, &[(1, "(1 2 3)"), (-1, "(1 3 2)")]);
        // Expanded by hand with the right-factor-first product.
        assert_eq!(
            nu(1, 4, 4).bracket(&c).unwrap(),
            el(
                4,
                &[
                    (-1, "(1 2 3 4)"),
                    (1, "(1 3 2 4)"),
                    (1, "(1 4 2 3)"),
                    (-1, "(1 4 3 2)")
                ]
            )
        );
        // The four-cycle combination (1234)+(1432)-(1243)-(1342) comes from
        // bracketing with 1 - (3 4) instead.
        assert_eq!(
            nu(3, 4, 4).bracket(&c).unwrap(),
            el(
                4,
                &[
                    (1, "(1 2 3 4)"),
                    (1, "(1 4 3 2)"),
                    (-1, "(1 2 4 3)"),
                    (-1, "(1 3 4 2)")
                ]
            )
        );
        assert_eq!(
            nu(2, 4, 4).bracket(&c).unwrap(),
            el(
                4,
                &[
                    (1, "(1 2 4 3)"),
                    (1, "(1 3 4 2)"),
                    (-1, "(1 3 2 4)"),
                    (-1, "(1 4 2 3)")
                ]
            )
        );
        assert!(c.bracket(&c).unwrap().is_zero());
    }

    #[test]
    fn conjugation_examples() {
        let g = Permutation::parse_cycles("(1 3 4)", 4).unwrap();
        let image = nu(1, 2, 4).conjugate(&g).unwrap();
        // (g(1) g(2)) = (3 2)
        assert_eq!(image, nu(2, 3, 4));
        let x = el(4, &[(1, "(1 2)(3 4)"), (5, "(2 4 3)")]);
        assert_eq!(x.conjugate(&Permutation::identity(4)).unwrap(), x);
        assert!(GroupAlgebraElement::zero(4)
            .conjugate(&g)
            .unwrap()
            .is_zero());
        assert!(x.conjugate(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn transposition_unit_examples() {
        assert_eq!(nu(1, 2, 2), el(2, &[(1, "()"), (-1, "(1 2)")]));
        assert_eq!(nu(1, 3, 4), el(4, &[(1, "()"), (-1, "(1 3)")]));
        assert!(GroupAlgebraElement::transposition_unit(2, 2, 3).is_err());
        assert!(GroupAlgebraElement::transposition_unit(0, 2, 3).is_err());
        assert!(GroupAlgebraElement::transposition_unit(2, 4, 3).is_err());
    }

    #[test]
    fn embedding_and_coefficient_sum() {
        assert_eq!(nu(1, 2, 2).embed(), nu(1, 2, 3));
        let z = GroupAlgebraElement::zero(3).embed();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 4);
        let c = el(3, &[(1, "(1 2 3)"), (-1, "(1 3 2)")]);
        assert_eq!(c.embed(), el(4, &[(1, "(1 2 3)"), (-1, "(1 3 2)")]));

        assert!(nu(2, 3, 5).coefficient_sum().is_zero());
        assert_eq!(GroupAlgebraElement::one(3).coefficient_sum(), q(1));
        let gamma1 = el(
            4,
            &[
                (1, "(1 2 3 4)"),
                (1, "(1 4 3 2)"),
                (-1, "(1 2 4 3)"),
                (-1, "(1 3 4 2)"),
            ],
        );
        assert!(gamma1.coefficient_sum().is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let x = el(4, &[(3, "(1 2)(3 4)"), (-7, "(2 4 3)"), (1, "()")]);
        let coords = x.to_coordinates();
        assert_eq!(coords.len(), 24);
        assert_eq!(coords[0], q(1));
        assert_eq!(
            GroupAlgebraElement::from_coordinates(4, &coords).unwrap(),
            x
        );
    }

    #[test]
    fn display() {
        let x = el(3, &[(1, "()"), (-2, "(1 2)")]);
        assert_eq!(alloc::format!("{x}"), "() - 2*(1 2)");
        assert_eq!(alloc::format!("{}", GroupAlgebraElement::zero(2)), "0");
    }
}
