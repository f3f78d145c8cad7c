use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the ordered index set `E`. Chain elements are the
/// integers `0..size`.
pub type IndexValue = BigRational;

pub fn int(v: i64) -> IndexValue {
    BigRational::from_integer(BigInt::from(v))
}

/// The totally ordered set `E` the construction is built over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderedIndex {
    /// `{0 < 1 < .. < size-1}`; never gapfree.
    FiniteChain(usize),
    /// `ℚ` with its usual order; gapfree.
    RationalLine,
}

impl OrderedIndex {
    pub fn chain(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::IndexTooSmall(1));
        }
        Ok(OrderedIndex::FiniteChain(size))
    }

    pub fn contains(&self, x: &IndexValue) -> bool {
        match self {
            OrderedIndex::FiniteChain(n) => {
                x.is_integer() && !x.is_negative() && x.to_integer() < BigInt::from(*n)
            }
            OrderedIndex::RationalLine => true,
        }
    }

    pub fn check(&self, x: &IndexValue) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInIndex(format_value(x)))
        }
    }

    /// Has two comparable elements and a strict intermediate between any
    /// two distinct ones.
    pub fn is_gapfree(&self) -> bool {
        matches!(self, OrderedIndex::RationalLine)
    }

    /// Some `z` with `x < z < y`, if one exists.
    pub fn strictly_between(&self, x: &IndexValue, y: &IndexValue) -> Option<IndexValue> {
        if x >= y {
            return None;
        }
        match self {
            OrderedIndex::RationalLine => Some((x + y) / int(2)),
            OrderedIndex::FiniteChain(_) => {
                let z = x + int(1);
                (&z < y).then_some(z)
            }
        }
    }

    /// All elements of a chain; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<IndexValue>> {
        match self {
            OrderedIndex::FiniteChain(n) => Some((0..*n as i64).map(int).collect()),
            OrderedIndex::RationalLine => None,
        }
    }

    /// Up to `size` increasing elements: a chain prefix, or `0, 1/2, 1, ..`.
    pub fn window(&self, size: usize) -> Vec<IndexValue> {
        match self {
            OrderedIndex::FiniteChain(n) => (0..size.min(*n) as i64).map(int).collect(),
            OrderedIndex::RationalLine => (0..size as i64)
                .map(|k| BigRational::new(k.into(), 2.into()))
                .collect(),
        }
    }

    /// Uniform chain element, or `a/b` with `|a| <= 8`, `1 <= b <= 4`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> IndexValue {
        match self {
            OrderedIndex::FiniteChain(n) => int(rng.random_range(0..*n as i64)),
            OrderedIndex::RationalLine => {
                let a: i64 = rng.random_range(-8..=8);
                let b: i64 = rng.random_range(1..=4);
                BigRational::new(a.into(), b.into())
            }
        }
    }

    /// Least element, when it exists.
    pub fn first(&self) -> Option<IndexValue> {
        match self {
            OrderedIndex::FiniteChain(_) => Some(IndexValue::zero()),
            OrderedIndex::RationalLine => None,
        }
    }

    pub fn last(&self) -> Option<IndexValue> {
        match self {
            OrderedIndex::FiniteChain(n) => Some(int(*n as i64 - 1)),
            OrderedIndex::RationalLine => None,
        }
    }
}

impl fmt::Display for OrderedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderedIndex::FiniteChain(n) => write!(f, "chain:{n}"),
            OrderedIndex::RationalLine => write!(f, "rationals"),
        }
    }
}

impl FromStr for OrderedIndex {
    type Err = Error;

    /// `chain:N` or `rationals`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rationals") || s.eq_ignore_ascii_case("q") {
            return Ok(OrderedIndex::RationalLine);
        }
        match s.strip_prefix("chain:").map(str::parse::<usize>) {
            Some(Ok(n)) => OrderedIndex::chain(n),
            _ => Err(Error::Parse(format!("invalid index {s:?}, expected chain:N or rationals"))),
        }
    }
}

impl Serialize for OrderedIndex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OrderedIndex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

pub fn format_value(x: &IndexValue) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_value(s: &str) -> Result<IndexValue> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid index value {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
