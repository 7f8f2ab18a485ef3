//! Parallelism, perpendicularity and paravector angles.

use crate::algebra::{CVector3, ComplexScalar, Paravector};
use crate::error::{ParavectorError, Result};
use crate::products::{integrated, scalar_product, vector_product, Orientation};
use crate::tolerance::Tolerance;

fn require_non_singular(p: &Paravector, tol: &Tolerance) -> Result<()> {
    if p.is_singular(tol) {
        Err(ParavectorError::SingularParavector { det_abs: p.det().norm() })
    } else {
        Ok(())
    }
}

fn pair_scale(a: &Paravector, b: &Paravector) -> f64 {
    a.euclidean_norm() * b.euclidean_norm()
}

/// Non-singular `a` and `b` are parallel when their right vector product
/// vanishes.
pub fn is_parallel(a: &Paravector, b: &Paravector, tol: &Tolerance) -> Result<bool> {
    require_non_singular(a, tol)?;
    require_non_singular(b, tol)?;
    let v = vector_product(a, b, Orientation::Right);
    Ok(v.norm() <= tol.threshold(pair_scale(a, b)))
}

/// Non-singular `a` and `b` are perpendicular when `⟨a, b⟩ = 0`.
pub fn is_perpendicular(a: &Paravector, b: &Paravector, tol: &Tolerance) -> Result<bool> {
    require_non_singular(a, tol)?;
    require_non_singular(b, tol)?;
    Ok(scalar_product(a, b).norm() <= tol.threshold(pair_scale(a, b)))
}

/// Vector parts have a vanishing cross product.
pub fn is_spatially_parallel(a: &Paravector, b: &Paravector, tol: &Tolerance) -> bool {
    let (u, w) = (a.vector(), b.vector());
    u.cross(&w).norm() <= tol.threshold(u.norm() * w.norm())
}

/// The right integrated product vanishes entirely. Only singular
/// paravectors can satisfy this.
pub fn is_singularly_parallel(a: &Paravector, b: &Paravector, tol: &Tolerance) -> bool {
    let v = integrated(a, b, Orientation::Right).value;
    v.euclidean_norm() <= tol.threshold(pair_scale(a, b))
}

/// Solves `a = λb` using the largest component of `b` as pivot and checks
/// the remaining components. Returns `None` when no such `λ` exists.
pub fn scalar_multiple(a: &Paravector, b: &Paravector, tol: &Tolerance) -> Option<ComplexScalar> {
    let complex = |p: &Paravector| -> [ComplexScalar; 4] {
        let [x, y, z] = p.vector().components();
        [p.scalar(), x, y, z]
    };
    let (ca, cb) = (complex(a), complex(b));
    let pivot = (0..4).max_by(|&i, &j| cb[i].norm().total_cmp(&cb[j].norm()))?;
    if cb[pivot].norm() == 0.0 {
        return None;
    }
    let lambda = ca[pivot] / cb[pivot];
    b.scale(lambda).approx_eq(a, tol).then_some(lambda)
}

/// A paravector angle. The scalar part is the cosinis; the vector part is
/// the sinis for left angles and the dextis for right angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    pub value: Paravector,
    pub orientation: Orientation,
}

/// Nature of an angle as read off its components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleCharacter {
    /// Real cosinis and real sinis: `cosi² - sini² = 1` behaves like `cosh² - sinh²`.
    Hyperbolic,
    /// Real cosinis and imaginary sinis: behaves like `cos² + sin² = 1`.
    Trigonometric,
    General,
}

impl Angle {
    pub fn identity(orientation: Orientation) -> Self {
        Angle { value: Paravector::ONE, orientation }
    }

    pub fn cosinis(&self) -> ComplexScalar {
        self.value.scalar()
    }

    /// Vector component of a left angle.
    pub fn sinis(&self) -> CVector3 {
        self.value.vector()
    }

    /// Vector component of a right angle.
    pub fn dextis(&self) -> CVector3 {
        self.value.vector()
    }

    pub fn character(&self, tol: &Tolerance) -> AngleCharacter {
        let scale = self.value.max_abs();
        let zero = |x: f64| tol.is_zero(x, scale);
        if !zero(self.cosinis().im) {
            return AngleCharacter::General;
        }
        let v = self.value.vector();
        if v.im().into_iter().all(zero) {
            AngleCharacter::Hyperbolic
        } else if v.re().into_iter().all(zero) {
            AngleCharacter::Trigonometric
        } else {
            AngleCharacter::General
        }
    }
}

/// Integrated product of two proper paravectors divided by the product of
/// their modules.
pub fn angle(a: &Paravector, b: &Paravector, orientation: Orientation, tol: &Tolerance) -> Result<Angle> {
    let improper = |p: &Paravector| {
        let det = p.det();
        ParavectorError::ImproperParavector { re: det.re, im: det.im }
    };
    if !a.classify(tol).is_proper {
        return Err(improper(a));
    }
    if !b.classify(tol).is_proper {
        return Err(improper(b));
    }
    let norm = a.module(tol)? * b.module(tol)?;
    let value = integrated(a, b, orientation).value * (1.0 / norm);
    Ok(Angle { value, orientation })
}

pub fn compose_angles(p: &Angle, q: &Angle) -> Result<Angle> {
    if p.orientation != q.orientation {
        return Err(ParavectorError::OrientationMismatch);
    }
    Ok(Angle {
        value: p.value * q.value,
        orientation: p.orientation,
    })
}

/// `Φ⁻`: cosinis unchanged, vector component negated.
pub fn explement(p: &Angle) -> Angle {
    Angle {
        value: p.value.rev(),
        orientation: p.orientation,
    }
}
