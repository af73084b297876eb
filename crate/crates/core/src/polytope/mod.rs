//! Kunz polytopes and their lattice points.
//!
//! The integer points of [`kunz_system`] are in bijection with the numerical
//! semigroups of multiplicity `m` (through Kunz coordinates). Adding a genus
//! cut, a Frobenius cut, or both, yields a polytope whose points are the
//! semigroups with those invariants fixed; [`med_system`] does the same for
//! maximal embedding dimension semigroups.

mod enumerate;
mod system;

pub use enumerate::{count_lattice_points, enumerate_lattice_points, variable_bounds, LatticePoints};
pub use system::{
    frobenius_system, genus_system, kunz_system, med_system, LinearConstraint, LinearSystem,
    Relation, SystemKind, SystemLabel,
};
