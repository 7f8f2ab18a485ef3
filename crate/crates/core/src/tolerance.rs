/// Combined absolute/relative tolerance.
///
/// A quantity `x` counts as zero when `|x| <= abs + rel * scale`, where the
/// scale is chosen by the caller (usually the largest absolute component of
/// the operands, squared for quadratic quantities such as determinants).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-9, rel: 1e-9 }
    }
}

impl Tolerance {
    /// Panics if either bound is negative or not finite.
    pub fn new(abs: f64, rel: f64) -> Self {
        assert!(abs >= 0.0 && abs.is_finite(), "absolute tolerance must be >= 0");
        assert!(rel >= 0.0 && rel.is_finite(), "relative tolerance must be >= 0");
        Tolerance { abs, rel }
    }

    /// Same bound for both the absolute and the relative part.
    pub fn uniform(eps: f64) -> Self {
        Self::new(eps, eps)
    }

    #[inline]
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }

    #[inline]
    pub fn is_zero(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.threshold(scale)
    }

    #[inline]
    pub fn close(&self, a: f64, b: f64, scale: f64) -> bool {
        (a - b).abs() <= self.threshold(scale)
    }
}
