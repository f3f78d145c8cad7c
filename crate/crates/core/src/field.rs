//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every [`Scalar`] carries its own field tag so that values coming from the
//! CLI, JSON, or Python can be checked against the ring they are used in.
//! Mixing scalars of different fields in arithmetic is a programming error
//! and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for `F_p`. Keeps products inside `u64`.
pub const MAX_MODULUS: u32 = 1 << 16;

/// Descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Builds `num / den`. Fails when `den` vanishes in this field.
    pub fn fraction(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inverse()
            .ok_or_else(|| Error::Parse(format!("denominator {den} vanishes in {self}")))?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// Parses `"a"` or `"a/b"` into a scalar of this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        match self {
            Field::Rational => {
                let n = BigInt::from_str(num).map_err(|_| bad())?;
                let d = BigInt::from_str(den).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(_) => {
                let n: i64 = num.parse().map_err(|_| bad())?;
                let d: i64 = den.parse().map_err(|_| bad())?;
                self.fraction(n, d)
            }
        }
    }

    /// Uniform element of `F_p`, or a small rational `a/b` with
    /// `|a| <= 9` and `1 <= b <= 9`.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Rational => {
                let n: i64 = rng.random_range(-9..=9);
                let d: i64 = rng.random_range(1..=9);
                Scalar::Rational(BigRational::new(n.into(), d.into()))
            }
            Field::Prime(p) => Scalar::Residue {
                value: rng.random_range(0..p),
                modulus: p,
            },
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" | "rational" | "rationals" => Ok(Field::Rational),
            other => match other.strip_prefix('f').map(str::parse::<u32>) {
                Some(Ok(p)) => Field::prime(p),
                _ => Err(Error::InvalidField(s.to_string())),
            },
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// JSON form of a scalar: `{"field": "f3", "value": "2"}`.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    field: Field,
    value: String,
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            field: self.field(),
            value: self.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        repr.field
            .parse_scalar(&repr.value)
            .map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f3 = Field::prime(3).unwrap();
        let two = f3.from_i64(2);
        assert_eq!(&two + &two, f3.one());
        assert_eq!(&two * &two, f3.one());
        assert_eq!(two.inverse().unwrap(), two);
        assert_eq!(-&f3.one(), two);
        assert!(f3.zero().inverse().is_none());
        assert_eq!(f3.from_i64(-1), two);
    }

    #[test]
    fn rational_parse_and_display() {
        let q = Field::Rational;
        let half = q.parse_scalar("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.parse_scalar("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse_scalar("7").unwrap().to_string(), "7");
        assert!(q.parse_scalar("1/0").is_err());
        assert_eq!(half.inverse().unwrap(), q.from_i64(2));
    }

    #[test]
    fn prime_parse_reduces_fractions() {
        let f5 = Field::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1/5").is_err());
    }

    #[test]
    fn field_descriptors() {
        assert_eq!("f2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert!("f4".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
        assert_eq!(Field::Prime(7).to_string(), "f7");
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let q = Field::Rational;
        let x = q.fraction(-2, 3).unwrap();
        let mut acc = q.one();
        for e in 0..6 {
            assert_eq!(x.pow(e), acc);
            acc = &acc * &x;
        }
    }

    #[test]
    fn scalar_json() {
        let x = Field::prime(3).unwrap().from_i64(2);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"field":"f3","value":"2"}"#);
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
        assert!(serde_json::from_str::<Scalar>(r#"{"field":"f4","value":"2"}"#).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = &Field::Rational.one() + &Field::Prime(2).one();
    }
}
