//! Geometry of the symmetrized polydisc `G_n` (the image of the unit
//! polydisc under the elementary symmetric functions), built on exact
//! root-location tests for monic complex polynomials.
//!
//! The crate is organised around a single membership oracle: a point
//! `z` in symmetrized coordinates lies in `G_n` exactly when all roots
//! of its associated monic polynomial lie in the open unit disc. On top
//! of that oracle sit complex-line slices and separating hyperplanes
//! ([`lines`]), desk-scale planar topology of slices ([`raster`]), and
//! support-function duality for balanced domains ([`duals`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature just switches the float math to the host intrinsics.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod duals;
pub mod lines;
pub mod poly;
pub mod raster;
pub mod schur;
pub mod symdisc;

mod tol;

pub use tol::Tolerances;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;

/// Largest supported polynomial degree / ambient dimension.
///
/// Everything in this crate targets small degrees; the simultaneous
/// root iteration and the reflection recursion are not tuned beyond
/// this.
pub const MAX_DEGREE: usize = 16;
