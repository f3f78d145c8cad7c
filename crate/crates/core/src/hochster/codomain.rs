//! Target rings of the cut evaluations: `K`, `K[t]`, and
//! `K[a,b]/(a(b-1))`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Codomain {
    /// The coefficient field itself.
    Field,
    /// `K[t]`.
    Polynomial,
    /// `K[a,b]/(a(b-1))`. Normal forms use the rewrite `ab → a`, so the
    /// monomials `a^i` (`i >= 1`) and `b^j` (`j >= 0`) form a basis.
    NodeQuotient,
}

impl Codomain {
    /// Whether the codomain has no zero divisors.
    pub fn is_integral(self) -> bool {
        !matches!(self, Codomain::NodeQuotient)
    }

    /// `(a, b - 1)`, both nonzero with product zero, for the quotient ring.
    pub fn zero_divisor_pair(self, field: Field) -> Option<(CodomainElement, CodomainElement)> {
        match self {
            Codomain::NodeQuotient => {
                let a = CodomainElement::monomial(self, field, 1, 0, field.one());
                let b = CodomainElement::monomial(self, field, 0, 1, field.one());
                let b_minus_one = b.sub(&CodomainElement::one(self, field));
                Some((a, b_minus_one))
            }
            _ => None,
        }
    }

    fn normalize_exponents(self, i: u32, j: u32) -> (u32, u32) {
        match self {
            Codomain::Field => (0, 0),
            Codomain::Polynomial => (i, 0),
            Codomain::NodeQuotient if i >= 1 && j >= 1 => (i, 0),
            Codomain::NodeQuotient => (i, j),
        }
    }
}

/// A normal-form element `Σ c_ij a^i b^j`. In `K[t]` only `j = 0` occurs and
/// `a` plays the role of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodomainElement {
    codomain: Codomain,
    field: Field,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl CodomainElement {
    pub fn zero(codomain: Codomain, field: Field) -> Self {
        CodomainElement {
            codomain,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(codomain: Codomain, field: Field) -> Self {
        Self::monomial(codomain, field, 0, 0, field.one())
    }

    /// `c·a^i·b^j`, reduced to normal form. Exponents beyond the
    /// codomain's variables are dropped (`Field` has none, `Polynomial`
    /// only `a`), so callers must pass meaningful exponents.
    pub fn monomial(codomain: Codomain, field: Field, i: u32, j: u32, c: Scalar) -> Self {
        let mut out = Self::zero(codomain, field);
        out.add_term(i, j, c);
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: Scalar) {
        let key = self.codomain.normalize_exponents(i, j);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn codomain(&self) -> Codomain {
        self.codomain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.codomain, other.codomain);
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.codomain, other.codomain);
        let mut out = Self::zero(self.codomain, self.field);
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &other.terms {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.codomain, self.field);
        for (&(i, j), d) in &self.terms {
            out.add_term(i, j, d * c);
        }
        out
    }
}

impl fmt::Display for CodomainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (va, vb) = match self.codomain {
            Codomain::Polynomial => ("t", "b"),
            _ => ("a", "b"),
        };
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            for (v, e) in [(va, i), (vb, j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(v),
                    e => mono.push_str(&format!("{v}^{e}")),
                }
            }
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CodomainElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
