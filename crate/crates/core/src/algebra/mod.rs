//! Complex scalars, complex 3-vectors and paravectors, with the ring
//! operations, both involutions, determinant, vigor, inverse, module and
//! classification.

mod classify;
mod paravector;
mod vector;

pub use classify::Classification;
pub use paravector::Paravector;
pub use vector::CVector3;

/// A complex number `a + id`.
pub type ComplexScalar = num_complex::Complex64;
