use serde::Serialize;

use super::{ComplexScalar, Paravector};
use crate::tolerance::Tolerance;

/// Which of the named paravector classes a value falls into.
///
/// `tol` is the threshold that was applied to determinant-sized quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Classification {
    #[serde(serialize_with = "serialize_complex")]
    pub det: ComplexScalar,
    pub is_proper: bool,
    pub is_singular: bool,
    pub is_orthogonal: bool,
    pub is_special: bool,
    pub is_unitar: bool,
    pub tol: f64,
}

fn serialize_complex<S: serde::Serializer>(z: &ComplexScalar, s: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

impl Classification {
    pub fn of(p: &Paravector, tol: &Tolerance) -> Self {
        let det = p.det();
        let scale = p.max_abs();
        let det_tol = tol.threshold(scale * scale);
        let linear_tol = tol.threshold(scale);

        let is_singular = det.norm() <= det_tol;
        // det ∈ R₊\{0}; the imaginary part is 2(ad - b·c)
        let is_proper = !is_singular && det.im.abs() <= det_tol && det.re > 0.0;
        let is_orthogonal = is_proper && (det - 1.0).norm() <= det_tol;
        // Γ⁻ = Γ*  ⇔  b = 0 and d = 0
        let is_special = p.s.im.abs() <= linear_tol && p.v.re().iter().all(|b| b.abs() <= linear_tol);
        let is_unitar = p.vigor().approx_eq_scaled(&Paravector::ONE, tol, scale * scale);

        Classification {
            det,
            is_proper,
            is_singular,
            is_orthogonal,
            is_special,
            is_unitar,
            tol: det_tol,
        }
    }
}
