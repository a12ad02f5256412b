//! Translational hulls of finite semigroups, and multiplier and comultiplier
//! monoids of finite-dimensional algebras and coalgebras over prime fields.

pub mod algebra;
pub mod census;
pub mod coalgebra;
pub mod degeneracy;
pub mod extension;
pub mod fp;
pub mod homsearch;
pub mod cli;
pub mod hull;
pub mod semigroup;
pub mod report;
pub mod sgp;
pub mod verify;

pub use hull::{hull, multipliers, Multiplier, TranslationalHull};
pub use semigroup::{FiniteMonoid, FiniteSemigroup, SelfMap, SemigroupHom};
