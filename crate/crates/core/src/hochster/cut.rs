//! Cuts `E = I ⊔ J` (I down-closed, J up-closed), the stalk classification
//! they induce, and explicit evaluation homomorphisms out of `K[M]`.
//!
//! With `g` the greatest element of `I` and `z` the smallest of `J` (when
//! they exist):
//!
//! * neither exists: `e_(x,m) ↦ 0` on `I`, `↦ 1` on `J`, into `K`;
//! * exactly one pivot `p`: below `p ↦ 0`, `e_(p,m) ↦ t^m`, above `↦ 1`,
//!   into `K[t]`;
//! * both (only for chains): below `g ↦ 0`, `e_(g,m) ↦ a^m`,
//!   `e_(z,m) ↦ b^m`, above `z ↦ 1`, into `K[a,b]/(a(b-1))`.
//!
//! For the rationals the third case cannot occur, so every evaluation lands
//! in a domain.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::codomain::{Codomain, CodomainElement};
use super::index::{format_value, int, parse_value, IndexValue, OrderedIndex};
use super::monoid::MonoidElement;
use super::ring::RingElement;
use crate::error::{Error, Result};
use crate::field::Field;

/// Which side of the cut the named element lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Side {
    /// `z ∈ I`.
    Lower,
    /// `z ∈ J`.
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `I = {x ≤ z}` (`Lower`) or `I = {x < z}` (`Upper`).
    At { z: IndexValue, side: Side },
    /// `I = ∅`.
    LowerEmpty,
    /// `J = ∅`.
    UpperEmpty,
    /// `I = {x | x < √n}` for a positive non-square `n`; rationals only.
    Sqrt(u32),
}

impl Cut {
    pub fn sqrt2() -> Self {
        Cut::Sqrt(2)
    }

    /// Chain cut `{0..=i} | {i+1..}`.
    pub fn between(i: i64) -> Self {
        Cut::At {
            z: int(i),
            side: Side::Lower,
        }
    }

    /// Membership in `I`.
    pub fn in_lower(&self, x: &IndexValue) -> bool {
        match self {
            Cut::At { z, side: Side::Lower } => x <= z,
            Cut::At { z, side: Side::Upper } => x < z,
            Cut::LowerEmpty => false,
            Cut::UpperEmpty => true,
            Cut::Sqrt(n) => x.is_negative() || x * x < int(*n as i64),
        }
    }

    pub fn validate(&self, index: &OrderedIndex) -> Result<()> {
        let invalid = || Error::InvalidCut {
            cut: self.to_string(),
            index: index.to_string(),
        };
        match self {
            Cut::At { z, .. } => index.check(z).map_err(|_| invalid()),
            Cut::LowerEmpty | Cut::UpperEmpty => Ok(()),
            Cut::Sqrt(n) => {
                let root = (*n as f64).sqrt().round() as u32;
                let square = (root.saturating_sub(1)..=root + 1).any(|r| r * r == *n);
                if *index != OrderedIndex::RationalLine || *n == 0 || square {
                    Err(invalid())
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Greatest element of `I`, if any.
    pub fn lower_max(&self, index: &OrderedIndex) -> Option<IndexValue> {
        match index {
            OrderedIndex::FiniteChain(_) => index
                .elements()?
                .into_iter().rfind(|x| self.in_lower(x)),
            OrderedIndex::RationalLine => match self {
                Cut::At { z, side: Side::Lower } => Some(z.clone()),
                _ => None,
            },
        }
    }

    /// Smallest element of `J`, if any.
    pub fn upper_min(&self, index: &OrderedIndex) -> Option<IndexValue> {
        match index {
            OrderedIndex::FiniteChain(_) => index
                .elements()?
                .into_iter()
                .find(|x| !self.in_lower(x)),
            OrderedIndex::RationalLine => match self {
                Cut::At { z, side: Side::Upper } => Some(z.clone()),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::At { z, side } => {
                let side = match side {
                    Side::Lower => "lower",
                    Side::Upper => "upper",
                };
                write!(f, "at:{}:{side}", format_value(z))
            }
            Cut::LowerEmpty => write!(f, "lowerEmpty"),
            Cut::UpperEmpty => write!(f, "upperEmpty"),
            Cut::Sqrt(n) => write!(f, "sqrt{n}"),
        }
    }
}

impl FromStr for Cut {
    type Err = Error;

    /// `at:<q>:lower|upper`, `sqrt2` (or `sqrtN`), `lowerEmpty`,
    /// `upperEmpty`, `between:<i>:<i+1>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid cut {s:?}"));
        if s.eq_ignore_ascii_case("lowerEmpty") {
            return Ok(Cut::LowerEmpty);
        }
        if s.eq_ignore_ascii_case("upperEmpty") {
            return Ok(Cut::UpperEmpty);
        }
        if let Some(n) = s.strip_prefix("sqrt") {
            return n.parse().map(Cut::Sqrt).map_err(|_| bad());
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["at", z, side] => {
                let side = match *side {
                    "lower" => Side::Lower,
                    "upper" => Side::Upper,
                    _ => return Err(bad()),
                };
                Ok(Cut::At {
                    z: parse_value(z)?,
                    side,
                })
            }
            ["between", i, j] => {
                let i: i64 = i.parse().map_err(|_| bad())?;
                let j: i64 = j.parse().map_err(|_| bad())?;
                if j != i + 1 {
                    return Err(bad());
                }
                Ok(Cut::between(i))
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for Cut {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cut {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Shape of the stalk at the prime(s) over a cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "camelCase")]
pub enum StalkClass {
    /// `I` has no greatest and `J` no smallest element; the stalk is `K`.
    TrivialField,
    /// Exactly one pivot; the stalk is a localization of `K[e_(z,1)]`.
    LocalizedPolynomial {
        #[serde(serialize_with = "ser_value")]
        pivot: IndexValue,
    },
    /// Adjacent pivots `g < z`, possible only when `E` has gaps.
    DoublePivot {
        #[serde(serialize_with = "ser_value")]
        lower: IndexValue,
        #[serde(serialize_with = "ser_value")]
        upper: IndexValue,
    },
}

fn ser_value<S: serde::Serializer>(x: &IndexValue, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_value(x))
}

impl fmt::Display for StalkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StalkClass::TrivialField => write!(f, "TrivialField"),
            StalkClass::LocalizedPolynomial { pivot } => {
                write!(f, "LocalizedPolynomial({})", format_value(pivot))
            }
            StalkClass::DoublePivot { lower, upper } => {
                write!(f, "DoublePivot({}, {})", format_value(lower), format_value(upper))
            }
        }
    }
}

impl StalkClass {
    pub fn codomain(&self) -> Codomain {
        match self {
            StalkClass::TrivialField => Codomain::Field,
            StalkClass::LocalizedPolynomial { .. } => Codomain::Polynomial,
            StalkClass::DoublePivot { .. } => Codomain::NodeQuotient,
        }
    }

    pub fn note(&self) -> &'static str {
        match self {
            StalkClass::TrivialField => "stalk is the coefficient field K",
            StalkClass::LocalizedPolynomial { .. } => {
                "stalk is a local ring of fractions of K[e_(z,1)]; a discrete valuation ring at the prime over t"
            }
            StalkClass::DoublePivot { .. } => {
                "evaluation lands in K[a,b]/(a(b-1)), which has zero divisors; only possible when E has a gap"
            }
        }
    }
}

pub fn stalk_classify(index: &OrderedIndex, cut: &Cut) -> Result<StalkClass> {
    cut.validate(index)?;
    Ok(match (cut.lower_max(index), cut.upper_min(index)) {
        (None, None) => StalkClass::TrivialField,
        (Some(pivot), None) | (None, Some(pivot)) => StalkClass::LocalizedPolynomial { pivot },
        (Some(lower), Some(upper)) => StalkClass::DoublePivot { lower, upper },
    })
}

/// An explicit ring homomorphism `K[M] → codomain` attached to a cut.
#[derive(Debug, Clone)]
pub struct CutEvaluation {
    cut: Cut,
    class: StalkClass,
    field: Field,
}

pub fn cut_evaluation(index: &OrderedIndex, field: Field, cut: &Cut) -> Result<CutEvaluation> {
    let class = stalk_classify(index, cut)?;
    Ok(CutEvaluation {
        cut: cut.clone(),
        class,
        field,
    })
}

impl CutEvaluation {
    pub fn class(&self) -> &StalkClass {
        &self.class
    }

    pub fn codomain(&self) -> Codomain {
        self.class.codomain()
    }

    pub fn one(&self) -> CodomainElement {
        CodomainElement::one(self.codomain(), self.field)
    }

    pub fn image_of_monoid(&self, mono: &MonoidElement) -> CodomainElement {
        let cod = self.codomain();
        let zero = CodomainElement::zero(cod, self.field);
        let one = self.one();
        let power = |i: u32, j: u32| CodomainElement::monomial(cod, self.field, i, j, self.field.one());
        let MonoidElement::Pair { x, m } = mono else {
            return one;
        };
        match &self.class {
            StalkClass::TrivialField => {
                if self.cut.in_lower(x) {
                    zero
                } else {
                    one
                }
            }
            StalkClass::LocalizedPolynomial { pivot } => match x.cmp(pivot) {
                Ordering::Less => zero,
                Ordering::Equal => power(*m, 0),
                Ordering::Greater => one,
            },
            StalkClass::DoublePivot { lower, upper } => {
                if x < lower {
                    zero
                } else if x == lower {
                    power(*m, 0)
                } else if x == upper {
                    power(0, *m)
                } else {
                    one
                }
            }
        }
    }

    pub fn apply(&self, r: &RingElement) -> CodomainElement {
        assert_eq!(r.field(), self.field, "element over another field");
        r.terms().fold(
            CodomainElement::zero(self.codomain(), self.field),
            |acc, (mono, c)| acc.add(&self.image_of_monoid(mono).scale(c)),
        )
    }

    /// `φ(r+s) = φ(r)+φ(s)` and `φ(rs) = φ(r)φ(s)`.
    pub fn respects(&self, r: &RingElement, s: &RingElement) -> bool {
        let additive = self.apply(&(r + s)) == self.apply(r).add(&self.apply(s));
        let multiplicative = self.apply(&(r * s)) == self.apply(r).mul(&self.apply(s));
        additive && multiplicative
    }
}

/// Sanity helper for chains: `n` must be a valid chain length.
pub fn chain_internal_cuts(n: usize) -> Vec<Cut> {
    (0..n.saturating_sub(1) as i64).map(Cut::between).collect()
}

/// A few representative rational cuts of every kind.
pub fn sample_rational_cuts() -> Vec<Cut> {
    let half = parse_value("1/2").expect("literal");
    vec![
        Cut::sqrt2(),
        Cut::Sqrt(3),
        Cut::LowerEmpty,
        Cut::UpperEmpty,
        Cut::At {
            z: IndexValue::zero(),
            side: Side::Upper,
        },
        Cut::At {
            z: half.clone(),
            side: Side::Lower,
        },
        Cut::At {
            z: -half,
            side: Side::Upper,
        },
        Cut::At {
            z: IndexValue::from_integer(BigInt::from(3)),
            side: Side::Lower,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> IndexValue {
        parse_value(s).unwrap()
    }

    #[test]
    fn sqrt2_cut_collapses_to_field() {
        let e = cut_evaluation(&OrderedIndex::RationalLine, Field::Rational, &Cut::sqrt2()).unwrap();
        assert_eq!(e.class(), &StalkClass::TrivialField);
        let mono = |x: i64, m: u32| MonoidElement::pair(int(x), m).unwrap();
        assert!(e.image_of_monoid(&mono(1, 5)).is_zero());
        assert_eq!(e.image_of_monoid(&mono(2, 3)), e.one());
        assert!(e.image_of_monoid(&MonoidElement::pair(q("-7/2"), 1).unwrap()).is_zero());
        assert_eq!(e.image_of_monoid(&MonoidElement::pair(q("3/2"), 1).unwrap()), e.one());
    }

    #[test]
    fn single_pivot_on_rationals() {
        let cut: Cut = "at:0:upper".parse().unwrap();
        let e = cut_evaluation(&OrderedIndex::RationalLine, Field::Rational, &cut).unwrap();
        assert_eq!(e.class(), &StalkClass::LocalizedPolynomial { pivot: int(0) });
        for m in 1..4 {
            let img = e.image_of_monoid(&MonoidElement::pair(int(0), m).unwrap());
            assert_eq!(img.to_string(), if m == 1 { "t".to_string() } else { format!("t^{m}") });
        }
        let lower = stalk_classify(&OrderedIndex::RationalLine, &"at:5/7:lower".parse().unwrap()).unwrap();
        assert_eq!(lower, StalkClass::LocalizedPolynomial { pivot: q("5/7") });
    }

    #[test]
    fn chain_internal_cut_is_double_pivot() {
        let c2 = OrderedIndex::chain(2).unwrap();
        let cut: Cut = "between:0:1".parse().unwrap();
        let e = cut_evaluation(&c2, Field::Rational, &cut).unwrap();
        assert_eq!(
            e.class(),
            &StalkClass::DoublePivot {
                lower: int(0),
                upper: int(1)
            }
        );
        // φ(e_(0,1)) · (1 - φ(e_(1,1))) = a(1 - b) = 0
        let a = e.image_of_monoid(&MonoidElement::pair(int(0), 1).unwrap());
        let b = e.image_of_monoid(&MonoidElement::pair(int(1), 1).unwrap());
        assert!(a.mul(&e.one().sub(&b)).is_zero());
        let c3 = OrderedIndex::chain(3).unwrap();
        assert_eq!(
            stalk_classify(&c3, &Cut::between(0)).unwrap(),
            StalkClass::DoublePivot {
                lower: int(0),
                upper: int(1)
            }
        );
    }

    #[test]
    fn extreme_cuts() {
        let q = OrderedIndex::RationalLine;
        assert_eq!(stalk_classify(&q, &Cut::LowerEmpty).unwrap(), StalkClass::TrivialField);
        assert_eq!(stalk_classify(&q, &Cut::UpperEmpty).unwrap(), StalkClass::TrivialField);
        let c = OrderedIndex::chain(3).unwrap();
        assert_eq!(
            stalk_classify(&c, &Cut::LowerEmpty).unwrap(),
            StalkClass::LocalizedPolynomial { pivot: int(0) }
        );
        assert_eq!(
            stalk_classify(&c, &Cut::UpperEmpty).unwrap(),
            StalkClass::LocalizedPolynomial { pivot: int(2) }
        );
    }

    #[test]
    fn invalid_cuts() {
        let c = OrderedIndex::chain(3).unwrap();
        assert!(matches!(stalk_classify(&c, &Cut::sqrt2()), Err(Error::InvalidCut { .. })));
        assert!(stalk_classify(&c, &Cut::between(5)).is_err());
        assert!(stalk_classify(&OrderedIndex::RationalLine, &Cut::Sqrt(4)).is_err());
        for s in ["between:0:2", "at:1:middle", "nowhere", "sqrtx"] {
            assert!(s.parse::<Cut>().is_err(), "{s}");
        }
    }

    #[test]
    fn cut_strings_round_trip() {
        for cut in sample_rational_cuts() {
            assert_eq!(cut.to_string().parse::<Cut>().unwrap(), cut);
        }
    }
}
