use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in `S_n` for different `n`.
    DegreeMismatch { left: usize, right: usize },
    /// A one-line image list that is not a bijection of `{1..n}`.
    InvalidPermutation(String),
    /// A part sequence that is not weakly decreasing and positive.
    InvalidPartition(String),
    /// Malformed cycle notation.
    Parse(String),
    /// An index argument outside its admissible range.
    IndexOutOfRange(String),
    /// The requested degree exceeds the configured limit.
    ResourceGuard { n: usize, max: usize },
    /// Some conjugate of a basis vector left the subspace.
    NotConjugationStable,
    /// A class function whose multiplicities are not nonnegative integers.
    NotACharacter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::ResourceGuard { n, max } => {
                write!(f, "n = {n} is outside the allowed range 1..={max}")
            }
            Error::NotConjugationStable => f.write_str("subspace not conjugation-stable"),
            Error::NotACharacter(msg) => write!(f, "input is not a genuine character: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
