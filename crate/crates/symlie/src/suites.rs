//! Property suites run by `symlie verify`.
//!
//! Randomized suites draw sparse elements from a ChaCha8 stream seeded
//! from the user's seed, so a seed reproduces a run exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symlie_core::exterior::{operator_matrix, permutation_operator, OperatorKind};
use symlie_core::lie::{is_lie_element, verify_embedding_of};
use symlie_core::perm::enumerate_group;
use symlie_core::{
    factorial, GroupAlgebraElement, Permutation, Rational, RationalMatrix, Result, Subspace,
};

/// Above this `n!`, the conjugation suite samples group elements instead of
/// running through all of `S_n`.
const FULL_GROUP_LIMIT: usize = 24;

/// Above this dimension, the closure suite samples basis pairs.
const FULL_PAIR_LIMIT: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Transpositions,
    Homomorphism,
    Conjugation,
    Embedding,
    Closure,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Transpositions,
        Suite::Homomorphism,
        Suite::Conjugation,
        Suite::Embedding,
        Suite::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Transpositions => "transpositions",
            Suite::Homomorphism => "homomorphism",
            Suite::Conjugation => "conjugation",
            Suite::Embedding => "embedding",
            Suite::Closure => "closure",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: usize,
    /// Human-readable description of the first failing check.
    pub witness: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A random element with 1 to 4 terms and nonzero coefficients in -3..=3.
pub fn random_element(rng: &mut impl Rng, n: usize) -> GroupAlgebraElement {
    let count = rng.gen_range(1..=4);
    let terms: Vec<(Permutation, Rational)> = (0..count)
        .map(|_| {
            let rank = rng.gen_range(0..factorial(n));
            let mut c = rng.gen_range(1..=3i64);
            if rng.gen_bool(0.5) {
                c = -c;
            }
            (
                Permutation::from_lex_rank(n, rank).expect("rank in range"),
                Rational::from_integer(c.into()),
            )
        })
        .collect();
    GroupAlgebraElement::from_terms(n, terms).expect("terms share the degree")
}

pub fn run_suite(
    suite: Suite,
    lie: &Subspace,
    seed: u64,
    samples: usize,
) -> Result<Vec<SuiteOutcome>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_suite(s, lie, seed, samples)?);
        }
        return Ok(out);
    }
    // Each suite gets its own stream so `all` and a single suite agree.
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let n = lie.degree();
    let outcome = match suite {
        Suite::Transpositions => transpositions(n)?,
        Suite::Homomorphism => homomorphism(n, &mut rng, samples)?,
        Suite::Conjugation => conjugation(n, &mut rng, samples)?,
        Suite::Embedding => {
            let report = verify_embedding_of(lie)?;
            (
                report.checked,
                report
                    .failures
                    .first()
                    .map(|i| format!("basis vector {i} of L_{n} does not embed into L_{}", n + 1)),
            )
        }
        Suite::Closure => closure(lie, &mut rng, samples)?,
        Suite::All => unreachable!(),
    };
    Ok(vec![SuiteOutcome {
        suite,
        checks: outcome.0,
        witness: outcome.1,
    }])
}

type Outcome = (usize, Option<String>);

fn transpositions(n: usize) -> Result<Outcome> {
    let mut checks = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            checks += 1;
            if !is_lie_element(&GroupAlgebraElement::transposition_unit(i, j, n)?)? {
                return Ok((checks, Some(format!("1 - ({i} {j}) is not a Lie element"))));
            }
        }
    }
    Ok((checks, None))
}

fn homomorphism(n: usize, rng: &mut ChaCha8Rng, samples: usize) -> Result<Outcome> {
    let mut checks = 0;
    for _ in 0..samples {
        let x = random_element(rng, n);
        let y = random_element(rng, n);
        let xy = x.multiply(&y)?;
        let br = x.bracket(&y)?;
        for m in 0..=n {
            checks += 1;
            let a = |z: &GroupAlgebraElement| operator_matrix(z, m, OperatorKind::Diagonal);
            let b = |z: &GroupAlgebraElement| operator_matrix(z, m, OperatorKind::Derivation);
            if a(&xy)? != a(&x)?.mul(&a(&y)?)? {
                return Ok((
                    checks,
                    Some(format!(
                        "A_{m}(xy) != A_{m}(x)A_{m}(y) for x = {x}, y = {y}"
                    )),
                ));
            }
            if b(&br)? != RationalMatrix::commutator(&b(&x)?, &b(&y)?)? {
                return Ok((
                    checks,
                    Some(format!(
                        "B_{m}([x,y]) != [B_{m}(x),B_{m}(y)] for x = {x}, y = {y}"
                    )),
                ));
            }
        }
    }
    Ok((checks, None))
}

fn conjugation(n: usize, rng: &mut ChaCha8Rng, samples: usize) -> Result<Outcome> {
    let group = enumerate_group(n)?;
    let ops: Vec<Vec<RationalMatrix>> = (0..=n)
        .map(|m| group.iter().map(|g| permutation_operator(g, m)).collect())
        .collect::<Result<_>>()?;
    let mut checks = 0;
    for _ in 0..samples {
        let x = random_element(rng, n);
        let chosen: Vec<usize> = if group.len() <= FULL_GROUP_LIMIT {
            (0..group.len()).collect()
        } else {
            let mut all: Vec<usize> = (0..group.len()).collect();
            all.shuffle(rng);
            all.truncate(FULL_GROUP_LIMIT);
            all
        };
        for &gi in &chosen {
            let g = &group[gi];
            let gi_inv = group.binary_search(&g.inverse()).expect("group is sorted");
            let conj = x.conjugate(g)?;
            for (m, ops_m) in ops.iter().enumerate() {
                for kind in [OperatorKind::Diagonal, OperatorKind::Derivation] {
                    checks += 1;
                    let lhs = operator_matrix(&conj, m, kind)?;
                    let rhs = ops_m[gi]
                        .mul(&operator_matrix(&x, m, kind)?)?
                        .mul(&ops_m[gi_inv])?;
                    if lhs != rhs {
                        return Ok((
                            checks,
                            Some(format!(
                                "{kind:?} action at m = {m} not equivariant for g = {g}, x = {x}"
                            )),
                        ));
                    }
                }
            }
        }
    }
    Ok((checks, None))
}

fn closure(lie: &Subspace, rng: &mut ChaCha8Rng, samples: usize) -> Result<Outcome> {
    let n = lie.degree();
    let basis = lie.basis_elements();
    let mut pairs = Vec::new();
    if basis.len() <= FULL_PAIR_LIMIT {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                pairs.push((i, j));
            }
        }
    } else {
        for _ in 0..samples {
            let i = rng.gen_range(0..basis.len());
            let j = rng.gen_range(0..basis.len());
            pairs.push((i, j));
        }
    }
    let mut checks = 0;
    for (i, j) in pairs {
        checks += 1;
        if !lie.contains(&basis[i].bracket(&basis[j])?)? {
            return Ok((
                checks,
                Some(format!("bracket of basis vectors {i} and {j} leaves L_{n}")),
            ));
        }
    }
    // (1 2) and (1 2 ... n) generate S_n.
    let mut generators = Vec::new();
    if n >= 2 {
        generators.push(Permutation::transposition(1, 2, n)?);
        generators.push(Permutation::cycle(&(1..=n).collect::<Vec<_>>(), n)?);
    }
    for g in &generators {
        for (i, u) in basis.iter().enumerate() {
            checks += 1;
            if !lie.contains(&u.conjugate(g)?)? {
                return Ok((
                    checks,
                    Some(format!("conjugating basis vector {i} by {g} leaves L_{n}")),
                ));
            }
        }
    }
    Ok((checks, None))
}
