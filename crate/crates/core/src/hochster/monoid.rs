use std::fmt;

use serde::{Deserialize, Serialize};

use super::index::{format_value, IndexValue, OrderedIndex};
use crate::error::{Error, Result};

/// An element of `M = L ∪ {1}` where `L = E × ℕ*`.
///
/// The derived order puts `One` first and sorts pairs by `(x, m)`; it is
/// only used for canonical term ordering, not for the multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElement {
    One,
    Pair { x: IndexValue, m: u32 },
}

impl MonoidElement {
    pub fn pair(x: IndexValue, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parse("levels start at 1".into()));
        }
        Ok(MonoidElement::Pair { x, m })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, MonoidElement::One)
    }

    pub fn level(&self) -> Option<u32> {
        match self {
            MonoidElement::One => None,
            MonoidElement::Pair { m, .. } => Some(*m),
        }
    }

    /// `(x,m)(y,n)` is `(x,m)` if `x < y`, `(y,n)` if `y < x`, and
    /// `(x, m+n)` if `x = y`. `One` is neutral.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (MonoidElement::One, b) => b.clone(),
            (a, MonoidElement::One) => a.clone(),
            (MonoidElement::Pair { x, m }, MonoidElement::Pair { x: y, m: n }) => {
                match x.cmp(y) {
                    std::cmp::Ordering::Less => self.clone(),
                    std::cmp::Ordering::Greater => other.clone(),
                    std::cmp::Ordering::Equal => MonoidElement::Pair {
                        x: x.clone(),
                        m: m.checked_add(*n).expect("monoid level overflow"),
                    },
                }
            }
        }
    }

    /// `(x,m)^k = (x, m·k)`, and anything to the `0` is `One`.
    pub fn pow(&self, k: u32) -> Self {
        match self {
            _ if k == 0 => MonoidElement::One,
            MonoidElement::One => MonoidElement::One,
            MonoidElement::Pair { x, m } => MonoidElement::Pair {
                x: x.clone(),
                m: m.checked_mul(k).expect("monoid level overflow"),
            },
        }
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElement::One => write!(f, "1"),
            MonoidElement::Pair { x, m } => write!(f, "({},{m})", format_value(x)),
        }
    }
}

/// Result of the finite checks on `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonoidReport {
    pub window: Vec<String>,
    pub max_level: u32,
    pub max_exponent: u32,
    /// `a^k = b^k ⇒ a = b` for `k >= 1` on the window.
    pub torsionfree: bool,
    pub torsionfree_checks: usize,
    /// `a^j = a^k ⇒ j = k` for `a ≠ 1`, `j, k >= 0` on the window.
    pub aperiodic: bool,
    pub aperiodic_checks: usize,
    /// Found a triple with `a·c = b·c` and `a ≠ b`.
    pub cancellable: bool,
    pub non_cancellable_witness: Option<CancellationWitness>,
    /// `a·1 = b·1 ⇒ a = b` on the window.
    pub one_cancellable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationWitness {
    pub a: String,
    pub b: String,
    pub c: String,
    pub product: String,
}

/// Exhaustive checks of torsionfreeness, aperiodicity and (non-)
/// cancellability of `M` over a window of `E` (at most 4 elements, levels
/// up to 4). Needs at least two elements in `E`.
pub fn monoid_property_witnesses(index: &OrderedIndex) -> Result<MonoidReport> {
    const WINDOW: usize = 4;
    const MAX_LEVEL: u32 = 4;
    const MAX_EXP: u32 = 4;
    let window = index.window(WINDOW);
    if window.len() < 2 {
        return Err(Error::IndexTooSmall(2));
    }
    let mut elems = vec![MonoidElement::One];
    for x in &window {
        for m in 1..=MAX_LEVEL {
            elems.push(MonoidElement::Pair { x: x.clone(), m });
        }
    }

    let mut torsionfree = true;
    let mut torsionfree_checks = 0;
    for a in &elems {
        for b in &elems {
            for k in 1..=MAX_EXP {
                torsionfree_checks += 1;
                if a.pow(k) == b.pow(k) && a != b {
                    torsionfree = false;
                }
            }
        }
    }

    let mut aperiodic = true;
    let mut aperiodic_checks = 0;
    for a in elems.iter().filter(|a| !a.is_one()) {
        for j in 0..=MAX_EXP {
            for k in 0..=MAX_EXP {
                aperiodic_checks += 1;
                if a.pow(j) == a.pow(k) && j != k {
                    aperiodic = false;
                }
            }
        }
    }

    let mut witness = None;
    'search: for c in &elems {
        for a in &elems {
            for b in &elems {
                if a != b && a.mul(c) == b.mul(c) {
                    witness = Some(CancellationWitness {
                        a: a.to_string(),
                        b: b.to_string(),
                        c: c.to_string(),
                        product: a.mul(c).to_string(),
                    });
                    break 'search;
                }
            }
        }
    }

    let one = MonoidElement::One;
    let one_cancellable = elems
        .iter()
        .all(|a| elems.iter().all(|b| a.mul(&one) != b.mul(&one) || a == b));

    Ok(MonoidReport {
        window: window.iter().map(format_value).collect(),
        max_level: MAX_LEVEL,
        max_exponent: MAX_EXP,
        torsionfree,
        torsionfree_checks,
        aperiodic,
        aperiodic_checks,
        cancellable: witness.is_none(),
        non_cancellable_witness: witness,
        one_cancellable,
    })
}
