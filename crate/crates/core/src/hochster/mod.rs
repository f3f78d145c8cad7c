//! The monoid algebra `R = K[M]`, `M = (E × ℕ*) ∪ {1}`, over a totally
//! ordered index set `E`, with the multiplication
//!
//! ```text
//! (x,m)·(y,n) = (x,m)     if x < y
//!               (y,n)     if x > y
//!               (x,m+n)   if x = y
//! ```
//!
//! `R` is reduced with only the trivial idempotents, yet
//! `e_(x,1)·(1 - e_(y,1)) = 0` for `x < y`, so it is not a domain. Primes
//! are organized by cuts of `E`; see [`cut`].

mod codomain;
pub mod cut;
mod index;
mod monoid;
mod ring;

pub use codomain::{Codomain, CodomainElement};
pub use cut::{cut_evaluation, stalk_classify, Cut, CutEvaluation, Side, StalkClass};
pub use index::{format_value, int, parse_value, IndexValue, OrderedIndex};
pub use monoid::{monoid_property_witnesses, CancellationWitness, MonoidElement, MonoidReport};
pub use ring::{HochsterRing, LeadingTerm, ReducednessCertificate, RingElement};

/// `e_(x,1)·(1 - e_(y,1))`, which vanishes whenever `x < y`.
pub fn zero_divisor_product(ring: &HochsterRing, x: &IndexValue, y: &IndexValue) -> crate::Result<RingElement> {
    let ex = ring.basis(x.clone(), 1)?;
    let ey = ring.basis(y.clone(), 1)?;
    Ok(&ex * &(&ring.one() - &ey))
}
