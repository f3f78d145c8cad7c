use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::index::{format_value, parse_value, IndexValue, OrderedIndex};
use super::monoid::MonoidElement;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// The monoid algebra `K[M]` for a given index set and coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochsterRing {
    index: OrderedIndex,
    field: Field,
}

impl HochsterRing {
    pub fn new(index: OrderedIndex, field: Field) -> Self {
        HochsterRing { index, field }
    }

    pub fn index(&self) -> &OrderedIndex {
        &self.index
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn zero(&self) -> RingElement {
        RingElement::zero(self.field)
    }

    pub fn one(&self) -> RingElement {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, c: Scalar) -> RingElement {
        RingElement::from_terms(self.field, [(MonoidElement::One, c)])
    }

    /// The basis element `e_(x,m)`.
    pub fn basis(&self, x: IndexValue, m: u32) -> Result<RingElement> {
        self.index.check(&x)?;
        let mono = MonoidElement::pair(x, m)?;
        Ok(RingElement::from_terms(self.field, [(mono, self.field.one())]))
    }

    pub fn monomial(&self, mono: MonoidElement, c: Scalar) -> Result<RingElement> {
        if let MonoidElement::Pair { x, .. } = &mono {
            self.index.check(x)?;
        }
        Ok(RingElement::from_terms(self.field, [(mono, c)]))
    }

    /// Checks that every term lies in this ring.
    pub fn check(&self, r: &RingElement) -> Result<()> {
        if r.field != self.field {
            return Err(Error::InvalidField(format!(
                "element over {}, ring over {}",
                r.field, self.field
            )));
        }
        for mono in r.terms.keys() {
            if let MonoidElement::Pair { x, .. } = mono {
                self.index.check(x)?;
            }
        }
        Ok(())
    }

    /// Up to `max_terms` random terms with levels in `1..=max_level`;
    /// the neutral element is included with probability 1/4.
    pub fn random_element<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        max_terms: usize,
        max_level: u32,
    ) -> RingElement {
        let count = rng.random_range(1..=max_terms.max(1));
        let mut r = self.zero();
        for _ in 0..count {
            let mono = if rng.random_range(0..4) == 0 {
                MonoidElement::One
            } else {
                MonoidElement::Pair {
                    x: self.index.random(rng),
                    m: rng.random_range(1..=max_level.max(1)),
                }
            };
            let term = RingElement::from_terms(self.field, [(mono, self.field.random_nonzero(rng))]);
            r = &r + &term;
        }
        r
    }

    /// A random element outside `K`: resampled until some pair term remains.
    pub fn random_non_scalar<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        max_terms: usize,
        max_level: u32,
    ) -> RingElement {
        loop {
            let r = self.random_element(rng, max_terms, max_level);
            if !r.is_scalar() {
                return r;
            }
        }
    }
}

/// A finitely supported `K`-linear combination of monoid elements.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    field: Field,
    terms: BTreeMap<MonoidElement, Scalar>,
}

impl RingElement {
    pub fn zero(field: Field) -> Self {
        RingElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (MonoidElement, Scalar)>>(field: Field, terms: I) -> Self {
        let mut r = RingElement::zero(field);
        for (mono, c) in terms {
            r.add_term(mono, c);
        }
        r
    }

    fn add_term(&mut self, mono: MonoidElement, c: Scalar) {
        assert_eq!(c.field(), self.field, "coefficient from another field");
        let sum = match self.terms.remove(&mono) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(mono, sum);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElement, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &MonoidElement) -> Scalar {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support contained in `{1}`, i.e. `r ∈ K`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(MonoidElement::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RingElement::from_terms(self.field, self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    /// `r² = r`. Over `K[M]` this only happens for `0` and `1`.
    pub fn is_idempotent(&self) -> bool {
        &self.square() == self
    }

    /// The term `c·e_(z,l)` where `l` is the largest level in the support
    /// and `z` the largest index at that level. `None` when `r ∈ K`.
    pub fn leading_data(&self) -> Option<LeadingTerm> {
        let level = self.terms.keys().filter_map(MonoidElement::level).max()?;
        let (mono, c) = self
            .terms
            .iter()
            .filter(|(m, _)| m.level() == Some(level))
            .max_by(|a, b| a.0.cmp(b.0))?;
        let MonoidElement::Pair { x, .. } = mono else {
            unreachable!("levels belong to pairs")
        };
        Some(LeadingTerm {
            level,
            pivot: x.clone(),
            coefficient: c.clone(),
        })
    }

    /// Certifies `r² ≠ 0` and `r² ≠ r` for `r ∉ K`. The coefficient of
    /// `e_(z,2l)` in `r²` is `c²`: the only products landing there are
    /// `e_(z,l)·e_(z,l)`, and `e_(z,2l)` is not in the support of `r`.
    pub fn reducedness_witness(&self) -> Result<ReducednessCertificate> {
        let lead = self.leading_data().ok_or(Error::ScalarElement)?;
        let square_level = lead.level.checked_mul(2).expect("monoid level overflow");
        let square_term = MonoidElement::Pair {
            x: lead.pivot.clone(),
            m: square_level,
        };
        let sq = self.square();
        let square_coefficient = sq.coefficient(&square_term);
        Ok(ReducednessCertificate {
            expected_coefficient: (&lead.coefficient * &lead.coefficient).to_string(),
            square_term: square_term.to_string(),
            square_coefficient: square_coefficient.to_string(),
            term_absent_from_element: self.coefficient(&square_term).is_zero(),
            square_nonzero: !sq.is_zero(),
            square_differs: sq != *self,
            leading: lead,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    pub level: u32,
    #[serde(serialize_with = "ser_value")]
    pub pivot: IndexValue,
    #[serde(serialize_with = "ser_scalar")]
    pub coefficient: Scalar,
}

fn ser_value<S: Serializer>(x: &IndexValue, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_value(x))
}

fn ser_scalar<S: Serializer>(c: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(c)
}

/// Evidence that `r` is neither nilpotent nor idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReducednessCertificate {
    pub leading: LeadingTerm,
    pub square_term: String,
    pub square_coefficient: String,
    pub expected_coefficient: String,
    pub term_absent_from_element: bool,
    pub square_nonzero: bool,
    pub square_differs: bool,
}

impl ReducednessCertificate {
    pub fn is_valid(&self) -> bool {
        self.square_coefficient == self.expected_coefficient
            && self.square_coefficient != "0"
            && self.term_absent_from_element
            && self.square_nonzero
            && self.square_differs
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero(self.field);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match m {
                MonoidElement::One => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "e{m}")?,
                _ => write!(f, "{c}*e{m}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: `{"field": "q", "terms": [[["1/2", 3], "2"], ["one", "5"]]}`
/// with terms in canonical order.
#[derive(Serialize, Deserialize)]
struct RingElementRepr {
    field: Field,
    terms: Vec<(MonoRepr, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MonoRepr {
    One(String),
    Pair(String, u32),
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RingElementRepr {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mono = match m {
                        MonoidElement::One => MonoRepr::One("one".into()),
                        MonoidElement::Pair { x, m } => MonoRepr::Pair(format_value(x), *m),
                    };
                    (mono, c.to_string())
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = RingElementRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (mono, c) in repr.terms {
            let mono = match mono {
                MonoRepr::One(tag) if tag == "one" => MonoidElement::One,
                MonoRepr::One(tag) => return Err(D::Error::custom(format!("bad monoid tag {tag:?}"))),
                MonoRepr::Pair(x, m) => {
                    let x = parse_value(&x).map_err(D::Error::custom)?;
                    MonoidElement::pair(x, m).map_err(D::Error::custom)?
                }
            };
            let c = repr.field.parse_scalar(&c).map_err(D::Error::custom)?;
            terms.push((mono, c));
        }
        Ok(RingElement::from_terms(repr.field, terms))
    }
}
