//! `L_n` as a representation of `S_n` under conjugation.
//!
//! Irreducible characters come from the Murnaghan-Nakayama rule, computed
//! on beta-sets (first-column hook lengths) so that removing a border strip
//! of length `r` is moving one bead down by `r`. All partitions are listed
//! in descending lexicographic order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::lie::{lie_basis, Subspace};
use crate::perm::{Partition, Permutation};
use crate::{factorial, Error, Rational, Result};

/// Largest `n` for which class sizes fit comfortably in `usize`.
const MAX_CLASS_DEGREE: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: usize,
    pub representative: Permutation,
}

/// One class per partition of `n`, descending lexicographic order. The
/// representative places its cycles on consecutive blocks of points,
/// longest cycle first.
pub fn conjugacy_classes(n: usize) -> Result<Vec<ConjugacyClass>> {
    if n == 0 || n > MAX_CLASS_DEGREE {
        return Err(Error::ResourceGuard {
            n,
            max: MAX_CLASS_DEGREE,
        });
    }
    let order = factorial(n);
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let mut start = 1;
            let mut cycles = Vec::with_capacity(mu.len());
            for &part in mu.parts() {
                cycles.push((start..start + part).collect::<Vec<_>>());
                start += part;
            }
            Ok(ConjugacyClass {
                size: order / mu.centralizer_order(),
                representative: Permutation::from_cycles(&cycles, n)?,
                cycle_type: mu,
            })
        })
        .collect()
}

/// `χ_λ(μ)` by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let mut memo = BTreeMap::new();
    mn_rec(lambda.parts().to_vec(), mu.parts(), &mut memo)
}

fn mn_rec(lambda: Vec<usize>, mu: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda, mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let lambda = &key.0;
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        // Beads jumped over = height of the removed strip.
        let height = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let k = next.len();
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (k - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// A function on the conjugacy classes of `S_n`, one value per partition of
/// `n` in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<(Partition, Rational)>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<(Partition, Rational)>) -> Result<Self> {
        let expected = Partition::all(n);
        if values.len() != expected.len() || values.iter().zip(&expected).any(|((p, _), e)| p != e)
        {
            return Err(Error::NotACharacter(format!(
                "class function on S_{n} must list every partition of {n} in descending order"
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, mu: &Partition) -> Option<&Rational> {
        self.values.iter().find(|(p, _)| p == mu).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter().map(|(p, v)| (p, v))
    }

    /// Value on the identity class, i.e. the dimension for a character.
    pub fn at_identity(&self) -> &Rational {
        &self.values.last().expect("partitions of n >= 1 exist").1
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<ConjugacyClass>,
    /// `values[λ][μ]`, both indexed in descending lexicographic order.
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.classes.iter().map(|c| &c.cycle_type)
    }

    pub fn value(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }

    pub fn row(&self, lambda: usize) -> &[i64] {
        &self.values[lambda]
    }

    /// `dim λ = χ_λ(1)`.
    pub fn dimension(&self, lambda: usize) -> i64 {
        *self.values[lambda].last().expect("nonempty table")
    }

    pub fn character(&self, lambda: usize) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .classes
                .iter()
                .zip(&self.values[lambda])
                .map(|(c, &v)| (c.cycle_type.clone(), Rational::from_integer(v.into())))
                .collect(),
        }
    }

    /// `<chi, χ_λ> = (1/n!) Σ_μ |C_μ| chi(μ) χ_λ(μ)`; characters of `S_n`
    /// are real, so no conjugation is needed.
    pub fn inner_product(&self, chi: &ClassFunction, lambda: usize) -> Rational {
        let mut acc = Rational::zero();
        for ((class, (_, v)), &irr) in self
            .classes
            .iter()
            .zip(&chi.values)
            .zip(&self.values[lambda])
        {
            acc += v * Rational::from_integer((class.size as i64 * irr).into());
        }
        acc / Rational::from_integer((factorial(self.n) as i64).into())
    }
}

/// The full character table of `S_n`.
pub fn irreducible_characters(n: usize) -> Result<CharacterTable> {
    let classes = conjugacy_classes(n)?;
    let values = classes
        .iter()
        .map(|lambda| {
            classes
                .iter()
                .map(|mu| mn_character(&lambda.cycle_type, &mu.cycle_type))
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, classes, values })
}

/// Character of the conjugation action `u -> g u g^{-1}` on `space`.
///
/// Coordinates in an RREF basis are the entries at the pivot columns, so
/// the trace at `g` is `Σ_i (g u_i g^{-1})[p_i]`. Stability is checked on
/// the class representatives of `(2,1,...)` and `(n)`, which generate
/// `S_n`.
pub fn conjugation_character(space: &Subspace) -> Result<ClassFunction> {
    let n = space.degree();
    let classes = conjugacy_classes(n)?;
    let basis = space.basis_elements();
    let generators: Vec<&Permutation> = classes
        .iter()
        .filter(|c| {
            let parts = c.cycle_type.parts();
            parts.first() == Some(&n) || (parts.first() == Some(&2) && parts.get(1) != Some(&2))
        })
        .map(|c| &c.representative)
        .collect();
    for g in generators {
        for u in &basis {
            if !space.contains(&u.conjugate(g)?)? {
                return Err(Error::NotConjugationStable);
            }
        }
    }
    let mut values = Vec::with_capacity(classes.len());
    for class in &classes {
        let g = &class.representative;
        let mut trace = Rational::zero();
        for (u, &p) in basis.iter().zip(space.pivots()) {
            let image = u.conjugate(g)?;
            trace += image.coefficient(&Permutation::from_lex_rank(n, p)?);
        }
        values.push((class.cycle_type.clone(), trace));
    }
    Ok(ClassFunction { n, values })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    /// `a_λ` for every partition, descending lexicographic order.
    pub multiplicities: Vec<(Partition, usize)>,
    pub total_dim: usize,
}

impl DecompositionReport {
    pub fn multiplicity(&self, lambda: &Partition) -> usize {
        self.multiplicities
            .iter()
            .find(|(p, _)| p == lambda)
            .map_or(0, |(_, a)| *a)
    }

    /// `R_n = Σ a_λ·s_λ` with zero terms omitted.
    pub fn frobenius_text(&self) -> String {
        let mut out = format!("R_{} =", self.n);
        let mut first = true;
        for (lambda, a) in self.multiplicities.iter().filter(|(_, a)| *a > 0) {
            let _ = write!(out, "{} {a}·s_{lambda}", if first { "" } else { " +" });
            first = false;
        }
        if first {
            out.push_str(" 0");
        }
        out
    }
}

/// Multiplicities of the irreducibles in `chi`, which must be a genuine
/// character.
pub fn multiplicities(chi: &ClassFunction, table: &CharacterTable) -> Result<DecompositionReport> {
    if chi.n != table.n {
        return Err(Error::DegreeMismatch {
            left: table.n,
            right: chi.n,
        });
    }
    let mut out = Vec::with_capacity(table.classes.len());
    let mut total = 0usize;
    for (lambda, class) in table.classes.iter().enumerate() {
        let a = table.inner_product(chi, lambda);
        if !a.is_integer() || a.is_negative() {
            return Err(Error::NotACharacter(format!(
                "multiplicity of {} is {a}",
                class.cycle_type
            )));
        }
        let a = a.to_integer().to_usize().expect("small multiplicity");
        total += a * table.dimension(lambda) as usize;
        out.push((class.cycle_type.clone(), a));
    }
    Ok(DecompositionReport {
        n: table.n,
        multiplicities: out,
        total_dim: total,
    })
}

/// Decomposition of `L_n` under conjugation.
pub fn decompose(lie: &Subspace) -> Result<DecompositionReport> {
    let table = irreducible_characters(lie.degree())?;
    multiplicities(&conjugation_character(lie)?, &table)
}

pub fn frobenius_report(n: usize) -> Result<(DecompositionReport, String)> {
    let report = decompose(&lie_basis(n)?)?;
    let text = report.frobenius_text();
    Ok((report, text))
}
