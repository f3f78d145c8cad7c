//! Exhaustive and exact checks of irreducibility, local irreducibility,
//! pointwise irreducibility and integrity.
//!
//! * [`finspace`]: finite topological spaces as specialization preorders.
//! * [`enumerate`]: all finite topologies on `n` labeled points, a
//!   theorem-checking harness over them, and counterexample search.
//! * [`prodfields`]: finite products of fields and their spectra.
//! * [`hochster`]: the monoid algebra `K[M]` over `M = (E × ℕ*) ∪ {1}`.
//! * [`gallery`] and [`trace`]: named example spaces and the
//!   statement-to-check listing.
//! * [`cli`]: the `irrlab` command line.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod finspace;
pub mod gallery;
pub mod hochster;
pub mod prodfields;
pub mod trace;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use finspace::{FiniteSpace, PropertyProfile, SubsetMask};
