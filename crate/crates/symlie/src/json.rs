//! Serialized forms of elements, bases, decompositions and reports.
//!
//! Rationals are `{ "num": "...", "den": "..." }` with decimal strings,
//! reduced, denominator positive. Partitions used as object keys are
//! written like `[3,1]`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use symlie_core::conjecture::{GenerationReport, QuotientReport};
use symlie_core::rep::{ClassFunction, DecompositionReport};
use symlie_core::{
    Error, GroupAlgebraElement, Partition, Permutation, Rational, RationalMatrix, Subspace,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(q: &Rational) -> Self {
        RationalJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalJson> for Rational {
    type Error = Error;

    fn try_from(q: &RationalJson) -> Result<Self, Error> {
        let parse = |s: &str| BigInt::from_str(s).map_err(|e| Error::Parse(format!("{s:?}: {e}")));
        let den = parse(&q.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational::new(parse(&q.num)?, den))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub perm: Vec<usize>,
    pub coeff: RationalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

impl From<&GroupAlgebraElement> for ElementJson {
    fn from(x: &GroupAlgebraElement) -> Self {
        // Term order of the element is already lex order of one-line images.
        ElementJson {
            degree: x.degree(),
            terms: x
                .terms()
                .map(|(p, c)| TermJson {
                    perm: p.images().to_vec(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&ElementJson> for GroupAlgebraElement {
    type Error = Error;

    fn try_from(x: &ElementJson) -> Result<Self, Error> {
        let terms = x
            .terms
            .iter()
            .map(|t| {
                Ok((
                    Permutation::from_images(t.perm.clone())?,
                    Rational::try_from(&t.coeff)?,
                ))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        GroupAlgebraElement::from_terms(x.degree, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    pub dim: usize,
    pub ordering: String,
    pub basis: Vec<ElementJson>,
}

impl From<&Subspace> for BasisJson {
    fn from(space: &Subspace) -> Self {
        BasisJson {
            n: space.degree(),
            dim: space.dim(),
            ordering: "one-line lex".into(),
            basis: space
                .basis_elements()
                .iter()
                .map(ElementJson::from)
                .collect(),
        }
    }
}

pub fn matrix_json(m: &RationalMatrix) -> Vec<Vec<RationalJson>> {
    m.row_iter()
        .map(|row| row.iter().map(RationalJson::from).collect())
        .collect()
}

pub fn partition_key(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Key order follows the descending lexicographic order of partitions, not
/// string order, so a `Vec` of pairs is serialized as a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // Only used by tests to read our own output back; key order is not
        // significant there.
        let map = BTreeMap::<String, V>::deserialize(d)?;
        Ok(OrderedMap(map.into_iter().collect()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub n: usize,
    pub character: OrderedMap<String>,
    pub multiplicities: OrderedMap<usize>,
    pub dim: usize,
}

impl DecompositionJson {
    pub fn new(chi: &ClassFunction, report: &DecompositionReport) -> Self {
        DecompositionJson {
            n: report.n,
            character: OrderedMap(
                chi.iter()
                    .map(|(p, v)| (partition_key(p), v.to_string()))
                    .collect(),
            ),
            multiplicities: OrderedMap(
                report
                    .multiplicities
                    .iter()
                    .map(|(p, a)| (partition_key(p), *a))
                    .collect(),
            ),
            dim: report.total_dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub n: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteJson {
    pub suite: String,
    pub checks: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub suites: Vec<SuiteJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationJson {
    pub n: usize,
    pub closure_dim: usize,
    pub lie_dim: usize,
    pub holds: bool,
    pub sweeps: usize,
}

impl From<&GenerationReport> for GenerationJson {
    fn from(r: &GenerationReport) -> Self {
        GenerationJson {
            n: r.n,
            closure_dim: r.closure_dim,
            lie_dim: r.lie_dim,
            holds: r.holds,
            sweeps: r.sweeps,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub n: usize,
    pub interpretation: String,
    pub lie_dim: usize,
    pub kernel_dim: usize,
    pub quotient_dim: usize,
    pub predicted: usize,
    pub matches: bool,
    pub commutator_count: usize,
    pub commutator_rank_mod_kernel: usize,
    pub commutators_form_basis: bool,
}

impl From<&QuotientReport> for QuotientJson {
    fn from(r: &QuotientReport) -> Self {
        QuotientJson {
            n: r.n,
            interpretation: r.interpretation.as_str().into(),
            lie_dim: r.lie_dim,
            kernel_dim: r.kernel_dim,
            quotient_dim: r.quotient_dim,
            predicted: r.predicted,
            matches: r.matches,
            commutator_count: r.commutator_count,
            commutator_rank_mod_kernel: r.commutator_rank_mod_kernel,
            commutators_form_basis: r.commutators_form_basis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub n: usize,
    pub lie_dim: usize,
    pub closure_dim: usize,
    pub generation_holds: bool,
    pub quotient_dim: OrderedMap<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let q = Rational::new((-6).into(), 4.into());
        let j = RationalJson::from(&q);
        assert_eq!((j.num.as_str(), j.den.as_str()), ("-3", "2"));
        assert_eq!(Rational::try_from(&j).unwrap(), q);
        let bad = RationalJson {
            num: "1".into(),
            den: "0".into(),
        };
        assert!(Rational::try_from(&bad).is_err());
    }

    #[test]
    fn element_layout() {
        let x =
            GroupAlgebraElement::from_cycle_terms(3, &[(1, "(1 2 3)"), (-1, "(1 3 2)")]).unwrap();
        let text = serde_json::to_string(&ElementJson::from(&x)).unwrap();
        assert_eq!(
            text,
            r#"{"degree":3,"terms":[{"perm":[2,3,1],"coeff":{"num":"1","den":"1"}},{"perm":[3,1,2],"coeff":{"num":"-1","den":"1"}}]}"#
        );
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(GroupAlgebraElement::try_from(&back).unwrap(), x);
    }

    #[test]
    fn partition_keys_keep_order() {
        let m = OrderedMap(vec![("[3]".to_string(), 1), ("[2,1]".to_string(), 2)]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"[3]":1,"[2,1]":2}"#);
        assert_eq!(
            partition_key(&Partition::new(vec![2, 1, 1]).unwrap()),
            "[2,1,1]"
        );
    }
}
