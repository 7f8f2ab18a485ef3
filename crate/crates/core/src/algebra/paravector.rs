use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CVector3, Classification, ComplexScalar};
use crate::error::{ParavectorError, Result};
use crate::tolerance::Tolerance;

const I: ComplexScalar = ComplexScalar::new(0.0, 1.0);

/// A complex scalar paired with a complex 3-vector, written `{α | β}` with
/// `α = a + id` and `β = b + ic`.
///
/// Multiplication is `{α₁|β₁}{α₂|β₂} = {α₁α₂ + β₁·β₂ | α₂β₁ + α₁β₂ + iβ₁×β₂}`,
/// which is associative but not commutative.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Paravector {
    pub(crate) s: ComplexScalar,
    pub(crate) v: CVector3,
}

impl Paravector {
    pub const ZERO: Paravector = Paravector {
        s: ComplexScalar::new(0.0, 0.0),
        v: CVector3::ZERO,
    };
    pub const ONE: Paravector = Paravector {
        s: ComplexScalar::new(1.0, 0.0),
        v: CVector3::ZERO,
    };

    /// Unchecked constructor for values derived from already validated ones.
    #[inline]
    pub(crate) const fn raw(s: ComplexScalar, v: CVector3) -> Self {
        Paravector { s, v }
    }

    pub fn try_new(s: ComplexScalar, v: CVector3) -> Result<Self> {
        Self::from_components(Self::raw(s, v).to_components())
    }

    /// Builds a paravector from `[a, d, bx, by, bz, cx, cy, cz]`, rejecting
    /// NaN and infinite entries.
    pub fn from_components(c: [f64; 8]) -> Result<Self> {
        if let Some((index, &value)) = c.iter().enumerate().find(|(_, x)| !x.is_finite()) {
            return Err(ParavectorError::NonFinite { index, value });
        }
        Ok(Paravector {
            s: ComplexScalar::new(c[0], c[1]),
            v: CVector3::from_parts([c[2], c[3], c[4]], [c[5], c[6], c[7]]),
        })
    }

    /// `[a, d, bx, by, bz, cx, cy, cz]`.
    pub fn to_components(&self) -> [f64; 8] {
        let b = self.v.re();
        let c = self.v.im();
        [self.s.re, self.s.im, b[0], b[1], b[2], c[0], c[1], c[2]]
    }

    /// The paravector `{α | 0}`.
    pub fn from_scalar(alpha: ComplexScalar) -> Result<Self> {
        Self::try_new(alpha, CVector3::ZERO)
    }

    /// The paravector `{0 | β}`.
    pub fn from_vector(beta: CVector3) -> Result<Self> {
        Self::try_new(ComplexScalar::new(0.0, 0.0), beta)
    }

    #[inline]
    pub fn scalar(&self) -> ComplexScalar {
        self.s
    }

    #[inline]
    pub fn vector(&self) -> CVector3 {
        self.v
    }

    /// Largest absolute value among the 8 real components.
    pub fn max_abs(&self) -> f64 {
        self.v.max_abs().max(self.s.re.abs()).max(self.s.im.abs())
    }

    /// Euclidean length of the 8 real components.
    pub fn euclidean_norm(&self) -> f64 {
        (self.s.norm_sqr() + self.v.norm().powi(2)).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.s.re.is_finite() && self.s.im.is_finite() && self.v.is_finite()
    }

    /// Multiplication by a complex number, i.e. by `{λ | 0}`.
    pub fn scale(&self, k: ComplexScalar) -> Paravector {
        Paravector::raw(self.s * k, self.v * k)
    }

    pub fn mul(&self, rhs: &Paravector) -> Paravector {
        let (a1, b1) = (self.s, self.v);
        let (a2, b2) = (rhs.s, rhs.v);
        Paravector::raw(
            a1 * a2 + b1.dot(&b2),
            b1 * a2 + b2 * a1 + b1.cross(&b2) * I,
        )
    }

    /// Reversion `{α | β}⁻ = {α | -β}`.
    pub fn rev(&self) -> Paravector {
        Paravector::raw(self.s, -self.v)
    }

    /// Complex conjugation of every component.
    pub fn conj(&self) -> Paravector {
        Paravector::raw(self.s.conj(), self.v.conj())
    }

    /// `ΓΓ*`, computed from the closed form
    /// `{a²+b²+c²+d² | 2(ab + dc + b×c)}`; always a real paravector.
    pub fn vigor(&self) -> Paravector {
        let (a, d) = (self.s.re, self.s.im);
        let b = self.v.re();
        let c = self.v.im();
        let sq = |u: [f64; 3]| u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
        let bxc = [
            b[1] * c[2] - b[2] * c[1],
            b[2] * c[0] - b[0] * c[2],
            b[0] * c[1] - b[1] * c[0],
        ];
        let vec: [f64; 3] = std::array::from_fn(|k| 2.0 * (a * b[k] + d * c[k] + bxc[k]));
        Paravector::raw(
            ComplexScalar::new(a * a + d * d + sq(b) + sq(c), 0.0),
            CVector3::real(vec),
        )
    }

    /// `ΓΓ⁻ = α² - β·β`; the vector part of that product vanishes identically.
    pub fn det(&self) -> ComplexScalar {
        self.s * self.s - self.v.dot(&self.v)
    }

    /// Threshold below which `|det|` counts as zero.
    pub(crate) fn det_threshold(&self, tol: &Tolerance) -> f64 {
        let scale = self.max_abs();
        tol.threshold(scale * scale)
    }

    pub fn is_singular(&self, tol: &Tolerance) -> bool {
        self.det().norm() <= self.det_threshold(tol)
    }

    /// `Γ⁻ / det Γ`.
    pub fn inverse(&self, tol: &Tolerance) -> Result<Paravector> {
        let det = self.det();
        if det.norm() <= self.det_threshold(tol) {
            return Err(ParavectorError::SingularParavector { det_abs: det.norm() });
        }
        Ok(self.rev().scale(det.inv()))
    }

    /// `√det Γ`, defined on proper and singular paravectors only.
    pub fn module(&self, tol: &Tolerance) -> Result<f64> {
        let class = self.classify(tol);
        if class.is_singular {
            Ok(0.0)
        } else if class.is_proper {
            Ok(class.det.re.sqrt())
        } else {
            Err(ParavectorError::ImproperParavector {
                re: class.det.re,
                im: class.det.im,
            })
        }
    }

    /// `Γ / |Γ|`, whose determinant is 1. Singular input has no such
    /// normalization and is rejected.
    pub fn normalize(&self, tol: &Tolerance) -> Result<Paravector> {
        let class = self.classify(tol);
        if !class.is_proper {
            return Err(ParavectorError::ImproperParavector {
                re: class.det.re,
                im: class.det.im,
            });
        }
        Ok(self.scale(ComplexScalar::new(1.0 / class.det.re.sqrt(), 0.0)))
    }

    pub fn classify(&self, tol: &Tolerance) -> Classification {
        Classification::of(self, tol)
    }

    /// Componentwise comparison with scale `max(|A|∞, |B|∞)`.
    pub fn approx_eq(&self, other: &Paravector, tol: &Tolerance) -> bool {
        let scale = self.max_abs().max(other.max_abs());
        self.approx_eq_scaled(other, tol, scale)
    }

    /// Componentwise comparison against an explicit scale, for results whose
    /// rounding error is governed by the operands rather than by the result.
    pub fn approx_eq_scaled(&self, other: &Paravector, tol: &Tolerance, scale: f64) -> bool {
        self.to_components()
            .iter()
            .zip(other.to_components())
            .all(|(x, y)| tol.close(*x, y, scale))
    }

    /// Largest componentwise absolute difference.
    pub fn max_diff(&self, other: &Paravector) -> f64 {
        self.to_components()
            .iter()
            .zip(other.to_components())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }
}

impl Add for Paravector {
    type Output = Paravector;
    fn add(self, rhs: Paravector) -> Paravector {
        Paravector::raw(self.s + rhs.s, self.v + rhs.v)
    }
}

impl Sub for Paravector {
    type Output = Paravector;
    fn sub(self, rhs: Paravector) -> Paravector {
        Paravector::raw(self.s - rhs.s, self.v - rhs.v)
    }
}

impl Neg for Paravector {
    type Output = Paravector;
    fn neg(self) -> Paravector {
        Paravector::raw(-self.s, -self.v)
    }
}

impl Mul for Paravector {
    type Output = Paravector;
    fn mul(self, rhs: Paravector) -> Paravector {
        Paravector::mul(&self, &rhs)
    }
}

impl Mul<ComplexScalar> for Paravector {
    type Output = Paravector;
    fn mul(self, k: ComplexScalar) -> Paravector {
        self.scale(k)
    }
}

impl Mul<f64> for Paravector {
    type Output = Paravector;
    fn mul(self, k: f64) -> Paravector {
        self.scale(ComplexScalar::new(k, 0.0))
    }
}

impl fmt::Display for Paravector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.v.components();
        write!(f, "{{{} | ({}, {}, {})}}", self.s, x, y, z)
    }
}
