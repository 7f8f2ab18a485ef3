use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::ComplexScalar;

/// Three-component complex vector `b + ic`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CVector3 {
    pub x: ComplexScalar,
    pub y: ComplexScalar,
    pub z: ComplexScalar,
}

impl CVector3 {
    pub const ZERO: CVector3 = CVector3 {
        x: ComplexScalar::new(0.0, 0.0),
        y: ComplexScalar::new(0.0, 0.0),
        z: ComplexScalar::new(0.0, 0.0),
    };

    pub const fn new(x: ComplexScalar, y: ComplexScalar, z: ComplexScalar) -> Self {
        CVector3 { x, y, z }
    }

    /// Builds `b + ic` from its real part `b` and imaginary part `c`.
    pub fn from_parts(b: [f64; 3], c: [f64; 3]) -> Self {
        CVector3 {
            x: ComplexScalar::new(b[0], c[0]),
            y: ComplexScalar::new(b[1], c[1]),
            z: ComplexScalar::new(b[2], c[2]),
        }
    }

    pub fn real(v: [f64; 3]) -> Self {
        Self::from_parts(v, [0.0; 3])
    }

    pub fn imaginary(v: [f64; 3]) -> Self {
        Self::from_parts([0.0; 3], v)
    }

    #[inline]
    pub fn components(&self) -> [ComplexScalar; 3] {
        [self.x, self.y, self.z]
    }

    /// Real part `b`.
    pub fn re(&self) -> [f64; 3] {
        [self.x.re, self.y.re, self.z.re]
    }

    /// Imaginary part `c`.
    pub fn im(&self) -> [f64; 3] {
        [self.x.im, self.y.im, self.z.im]
    }

    /// Unconjugated bilinear dot product `u.v = ux vx + uy vy + uz vz`.
    #[inline]
    pub fn dot(&self, other: &CVector3) -> ComplexScalar {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn cross(&self, other: &CVector3) -> CVector3 {
        CVector3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    /// Componentwise complex conjugate `b - ic`.
    pub fn conj(&self) -> CVector3 {
        CVector3 {
            x: self.x.conj(),
            y: self.y.conj(),
            z: self.z.conj(),
        }
    }

    pub fn scale(&self, k: ComplexScalar) -> CVector3 {
        CVector3 {
            x: self.x * k,
            y: self.y * k,
            z: self.z * k,
        }
    }

    /// Hermitian length `sqrt(|x|^2 + |y|^2 + |z|^2)`; always real.
    pub fn norm(&self) -> f64 {
        (self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.re()
            .into_iter()
            .chain(self.im())
            .fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.re().into_iter().chain(self.im()).all(f64::is_finite)
    }
}

impl Add for CVector3 {
    type Output = CVector3;
    fn add(self, rhs: CVector3) -> CVector3 {
        CVector3 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl AddAssign for CVector3 {
    fn add_assign(&mut self, rhs: CVector3) {
        *self = *self + rhs;
    }
}

impl Sub for CVector3 {
    type Output = CVector3;
    fn sub(self, rhs: CVector3) -> CVector3 {
        CVector3 {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl Neg for CVector3 {
    type Output = CVector3;
    fn neg(self) -> CVector3 {
        CVector3 {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl Mul<ComplexScalar> for CVector3 {
    type Output = CVector3;
    fn mul(self, k: ComplexScalar) -> CVector3 {
        self.scale(k)
    }
}

impl Mul<f64> for CVector3 {
    type Output = CVector3;
    fn mul(self, k: f64) -> CVector3 {
        self.scale(ComplexScalar::new(k, 0.0))
    }
}
