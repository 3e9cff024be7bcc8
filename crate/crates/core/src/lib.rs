//! Exact computations in the rank-2 affine Coxeter groups Ã2, C̃2, G̃2 (plus
//! the infinite dihedral sanity type Ã1).
//!
//! Everything outside rendering is exact: roots live in the simple-root
//! basis, points in the simple-coroot basis, and all pairings are integers
//! or rationals. Group elements are affine maps `x ↦ Mx + λ` with integer
//! matrix and translation, so element equality, lengths (by counting
//! separating walls) and descent sets are decidable without any rounding.
//!
//! Module layout:
//!
//! - [`root_data`]: root systems, pairings, hyperplanes, affine reflections
//! - [`coxeter`]: group elements, words, lengths, descents, enumeration
//! - [`bruhat`]: Bruhat order predicate, brute-force subword oracle, shadows
//! - [`gallery`]: combinatorial galleries, multifoldings, footprints
//! - [`annex`]: annex enumeration with boundary extraction
//! - [`boundary`]: halfspaces, parallel reflection sequences, and the
//!   per-instance verifiers for the structural theorems
//! - [`verify`]: exhaustive desk-scale sweeps over all of the above

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod annex;
pub mod boundary;
pub mod bruhat;
pub mod coxeter;
mod error;
pub mod exact;
pub mod gallery;
pub mod root_data;
pub mod verify;

pub use coxeter::{Element, GroupContext, Word};
pub use error::Error;
pub use exact::Rat;
pub use root_data::{AffineType, Hyperplane, Root, RootSystem};
