//! Baxter permutations and plane bipolar orientations.
//!
//! The crate builds the bijection between the two families in both
//! directions, the generating trees that grow them one element at a time,
//! and the counting formulas used to cross-check exhaustive enumerations.

pub mod perm;
pub mod bijection;
pub mod gentree;
pub mod enumeration;
pub mod planar;

pub use perm::{Permutation, PermError};
pub use planar::{BipolarOrientation, PlaneMap};
