//! Permutations of `{1..n}`, cycle types and the standard embedding
//! `S_n -> S_{n+1}`.
//!
//! Points are 1-based everywhere a caller can see them. Internally a
//! permutation is its one-line image list; cycle notation is only an I/O
//! format.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{check_degree, factorial, Error, Result, HARD_MAX_DEGREE};

/// A bijection of `{1..n}` stored as its one-line images.
///
/// The derived ordering is lexicographic on the images, which for a fixed
/// degree is the coordinate order used for `Q[S_n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` in `S_n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        Self::cycle(&[i, j], n)
    }

    /// The cycle `(c_1 c_2 ... c_k)` sending `c_s` to `c_{s+1 mod k}`.
    pub fn cycle(points: &[usize], n: usize) -> Result<Self> {
        Self::from_cycles(&[points], n)
    }

    /// Product of disjoint cycles. Fixed points may be omitted.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (s, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(Error::IndexOutOfRange(format!(
                        "point {point} outside 1..={n}"
                    )));
                }
                if used[point - 1] {
                    return Err(Error::InvalidPermutation(format!("point {point} repeated")));
                }
                used[point - 1] = true;
                images[point - 1] = cycle[(s + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`: the map `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g^{-1}`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        Ok(g.compose(self)?.compose_unchecked(&g.inverse()))
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let cycles = self.cycles().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The standard embedding into `S_{n+1}` fixing the new point `n+1`.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.degree() + 1);
        Permutation { images }
    }

    /// Position of this permutation in the lexicographic enumeration of
    /// `S_n` (the Lehmer code read as a factorial-base number).
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Result<Permutation> {
        let total = factorial(n);
        if n == 0 || rank >= total {
            return Err(Error::IndexOutOfRange(format!(
                "rank {rank} outside S_{n} of order {total}"
            )));
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let block = factorial(n - 1 - i);
            let d = rank / block;
            rank %= block;
            images.push(pool.remove(d));
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2 3)(4,5)"` or `"()"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Parse(
                "empty input; write \"()\" for the identity".into(),
            ));
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let mut cycle = Vec::new();
            for token in body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let point: usize = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {token:?}")))?;
                if point == 0 || point > degree {
                    return Err(Error::Parse(format!("point {point} outside 1..={degree}")));
                }
                cycle.push(point);
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(&cycles, degree).map_err(|e| match e {
            Error::InvalidPermutation(msg) | Error::IndexOutOfRange(msg) => Error::Parse(msg),
            other => other,
        })
    }

    /// Cycle notation without fixed points; the identity is `"()"`.
    pub fn format_cycles(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            out.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{p}"));
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.format_cycles(), self.degree())
    }
}

/// All of `S_n` in lexicographic order of one-line images. Entry 0 is the
/// identity.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>> {
    check_degree(n, HARD_MAX_DEGREE)?;
    let mut out = Vec::with_capacity(factorial(n));
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to 1.
    pub fn fixed_points(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Centralizer order `z = Π i^{m_i} m_i!` of a permutation of this
    /// cycle type.
    pub fn centralizer_order(&self) -> usize {
        let mut z = 1;
        let mut k = 0;
        while k < self.parts.len() {
            let part = self.parts[k];
            let mult = self.parts[k..].iter().take_while(|&&p| p == part).count();
            z *= part.pow(mult as u32) * factorial(mult);
            k += mult;
        }
        z
    }

    /// All partitions of `n` in descending lexicographic order, starting
    /// with `(n)` and ending with `(1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_rec(n, n, &mut current, &mut out);
        out
    }
}

fn partitions_rec(
    remaining: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
