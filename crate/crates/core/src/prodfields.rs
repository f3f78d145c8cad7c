//! Finite products of fields `R = ∏ K_i`.
//!
//! Every element `x` has a pseudo-inverse `x̄` (invert the nonzero
//! coordinates, keep the zeros) with `x = x²·x̄`. Then `e = x·x̄` is the
//! idempotent support indicator of `x`, `D(x) = D(e)`, and
//! `V(e) = D(1 - e)`, so every principal open is also closed. The primes of
//! `R` are the kernels of the coordinate projections; they are pairwise
//! incomparable and `Spec R` is discrete.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::finspace::FiniteSpace;

/// `∏_{i ∈ I} K_i` for a finite index set `I = {0, .., |I|-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRing {
    factors: Vec<Field>,
}

impl ProductRing {
    pub fn new(factors: Vec<Field>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(ProductRing { factors })
    }

    /// `K^size`.
    pub fn uniform(field: Field, size: usize) -> Result<Self> {
        Self::new(vec![field; size])
    }

    pub fn factors(&self) -> &[Field] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> ProductElement {
        ProductElement {
            entries: self.factors.iter().map(|f| f.zero()).collect(),
        }
    }

    pub fn one(&self) -> ProductElement {
        ProductElement {
            entries: self.factors.iter().map(|f| f.one()).collect(),
        }
    }

    /// The standard idempotent with a single `1` at coordinate `j`.
    pub fn unit_vector(&self, j: usize) -> ProductElement {
        ProductElement {
            entries: self
                .factors
                .iter()
                .enumerate()
                .map(|(i, f)| if i == j { f.one() } else { f.zero() })
                .collect(),
        }
    }

    pub fn element(&self, entries: Vec<Scalar>) -> Result<ProductElement> {
        if entries.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                got: entries.len(),
            });
        }
        for (index, (s, f)) in entries.iter().zip(&self.factors).enumerate() {
            if s.field() != *f {
                return Err(Error::FieldMismatch {
                    index,
                    expected: f.to_string(),
                    got: s.field().to_string(),
                });
            }
        }
        Ok(ProductElement { entries })
    }

    pub fn from_i64s(&self, values: &[i64]) -> Result<ProductElement> {
        if values.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                got: values.len(),
            });
        }
        Ok(ProductElement {
            entries: values
                .iter()
                .zip(&self.factors)
                .map(|(&v, f)| f.from_i64(v))
                .collect(),
        })
    }

    /// Parses coordinates such as `["1/2", "0", "-3"]`.
    pub fn parse(&self, values: &[&str]) -> Result<ProductElement> {
        if values.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                got: values.len(),
            });
        }
        let entries = values
            .iter()
            .zip(&self.factors)
            .map(|(v, f)| f.parse_scalar(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductElement { entries })
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ProductElement {
        ProductElement {
            entries: self.factors.iter().map(|f| f.random(rng)).collect(),
        }
    }

    /// Every element, for small prime fields only.
    pub fn elements(&self) -> Option<Vec<ProductElement>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            let Field::Prime(p) = *f else { return None };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Scalar>| {
                    (0..p as i64).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(f.from_i64(v));
                        next
                    })
                })
                .collect();
        }
        Some(
            out.into_iter()
                .map(|entries| ProductElement { entries })
                .collect(),
        )
    }

    /// One prime per coordinate: the kernel of the projection onto `K_j`.
    pub fn spectrum(&self) -> Vec<SpecPoint> {
        (0..self.len()).map(|j| SpecPoint { j }).collect()
    }

    /// `𝔭 ⊆ 𝔮`, decided on ideal generators: `ker π_j` is generated by the
    /// unit vectors `e_i`, `i ≠ j`.
    pub fn prime_contained_in(&self, p: SpecPoint, q: SpecPoint) -> bool {
        p.generators(self).iter().all(|g| q.contains(g))
    }

    /// The specialization preorder on `Spec R`: `𝔭 ⪯ 𝔮` iff `𝔮 ⊆ 𝔭`.
    pub fn spectrum_space(&self) -> FiniteSpace {
        let pts = self.spectrum();
        FiniteSpace::from_fn(pts.len(), |x, y| self.prime_contained_in(pts[y], pts[x]))
            .expect("inclusion of ideals is a preorder")
    }
}

/// A tuple `(x_i)` in a product of fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductElement {
    entries: Vec<Scalar>,
}

/// The prime `∏_{i ≠ j} K_i`, the kernel of the `j`-th projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecPoint {
    pub j: usize,
}

impl SpecPoint {
    pub fn contains(&self, x: &ProductElement) -> bool {
        x.entries[self.j].is_zero()
    }

    fn generators(&self, ring: &ProductRing) -> Vec<ProductElement> {
        (0..ring.len())
            .filter(|&i| i != self.j)
            .map(|i| ring.unit_vector(i))
            .collect()
    }
}

impl ProductElement {
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(self.len(), other.len(), "product elements of different arity");
        ProductElement {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_idempotent(&self) -> bool {
        &self.square() == self
    }

    /// `x̄`: coordinatewise inverse where `x_i ≠ 0`, zero elsewhere.
    pub fn pseudo_inverse(&self) -> Self {
        ProductElement {
            entries: self
                .entries
                .iter()
                .map(|s| s.inverse().unwrap_or_else(|| s.field().zero()))
                .collect(),
        }
    }

    /// `e = x·x̄`, the idempotent with `D(x) = D(e)`.
    pub fn idempotent(&self) -> Self {
        self.mul(&self.pseudo_inverse())
    }

    /// `D(x)`: primes not containing `x`, i.e. indices with `x_j ≠ 0`.
    pub fn principal_open(&self) -> BTreeSet<SpecPoint> {
        (0..self.len())
            .map(|j| SpecPoint { j })
            .filter(|p| !p.contains(self))
            .collect()
    }

    /// `V(x)`: primes containing `x`.
    pub fn vanishing_set(&self) -> BTreeSet<SpecPoint> {
        (0..self.len())
            .map(|j| SpecPoint { j })
            .filter(|p| p.contains(self))
            .collect()
    }

    /// Same shape, every coordinate one.
    pub fn one_like(&self) -> Self {
        ProductElement {
            entries: self.entries.iter().map(|s| s.field().one()).collect(),
        }
    }
}

impl fmt::Display for ProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// The checks applied to one element, all exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdempotentReport {
    pub element: String,
    pub pseudo_inverse: String,
    pub idempotent: String,
    pub regular: bool,
    pub idempotent_squares: bool,
    pub fixes_element: bool,
    pub same_principal_open: bool,
    pub vanishing_is_complement_open: bool,
}

impl IdempotentReport {
    pub fn of(x: &ProductElement) -> Self {
        let xbar = x.pseudo_inverse();
        let e = x.idempotent();
        let one_minus_e = x.one_like().sub(&e);
        IdempotentReport {
            element: x.to_string(),
            pseudo_inverse: xbar.to_string(),
            idempotent: e.to_string(),
            regular: x.square().mul(&xbar) == *x,
            idempotent_squares: e.is_idempotent(),
            fixes_element: x.mul(&e) == *x,
            same_principal_open: x.principal_open() == e.principal_open(),
            vanishing_is_complement_open: e.vanishing_set() == one_minus_e.principal_open(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.regular
            && self.idempotent_squares
            && self.fixes_element
            && self.same_principal_open
            && self.vanishing_is_complement_open
    }
}
