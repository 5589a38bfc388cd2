//! Exact computer algebra for almost-graded Lie algebras of Witt and
//! Krichever-Novikov type.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: scalars are
//! arbitrary precision rationals and structure constants are polynomials in
//! the family parameters.
//!
//! * [`family`] holds the bracket engine: [`FamilySpec`] rules, brackets,
//!   grading bounds, specialization.
//! * [`catalog`] builds every family in normal form.
//! * [`jacobi`] and [`abelian`] certify identities and compute commutator
//!   codimensions.
//! * [`geom`] realizes basis elements as vector fields and re-derives the
//!   structure constants from them.
//! * [`cohomology`] implements Chevalley-Eilenberg cochains, coboundary
//!   solving and graded trivial-coefficient cohomology of `L_1`.
//! * [`central`] computes residue cocycles at genus zero.
//! * [`moduli`] covers the cubic curve parameters and rescalings.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod catalog;
pub mod central;
pub mod cohomology;
pub mod element;
pub mod error;
pub mod family;
pub mod geom;
pub mod jacobi;
pub mod linalg;
pub mod moduli;
pub mod poly;
pub mod rational;

pub use element::{BasisIndex, LieElement};
pub use error::{Error, Result};
pub use family::{Affine, BasisDomain, BracketRule, CentralRule, FamilySpec, GradingBounds, ShiftTerm};
pub use poly::ParamPoly;
pub use rational::Rational;
