//! Counting and enumerating numerical semigroups of fixed multiplicity,
//! genus and/or Frobenius number as lattice points of Kunz polytopes.
//!
//! - [`semigroup`]: semigroups, Apéry sets, Kunz coordinates.
//! - [`polytope`]: the inequality systems and exact lattice point search.
//! - [`closed_forms`]: counting formulas for multiplicities 3 and 4.
//! - [`oracle`]: an independent semigroup-tree enumeration by genus.
//! - [`census`] and [`verify`]: census tables and the formula adjudication
//!   sweep used by the command-line tool.

pub mod arith;
pub mod census;
pub mod closed_forms;
mod error;
pub mod oracle;
pub mod polytope;
pub mod published;
pub mod semigroup;
pub mod verify;

pub use error::{Error, KunzViolation, Result};
pub use semigroup::{KunzCoords, SemigroupDescriptor};
