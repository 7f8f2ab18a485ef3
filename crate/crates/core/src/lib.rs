//! Paravector algebra.
//!
//! A paravector `{α | β}` pairs a complex scalar `α = a + id` with a complex
//! 3-vector `β = b + ic`. This crate provides the ring operations and
//! involutions, determinant and vigor, integrated products, parallelism and
//! angles, rotations and symmetries, the 4×4 and Pauli matrix
//! representations, and a seeded property fuzzer.

pub mod algebra;
pub mod error;
pub mod fuzz;
pub mod geometry;
pub mod matrix;
pub mod products;
pub mod tolerance;
pub mod transforms;

pub use algebra::{CVector3, Classification, ComplexScalar, Paravector};
pub use error::{ParavectorError, Result};
pub use products::Orientation;
pub use tolerance::Tolerance;
