//! Similarity, rotations, mirror and axial symmetries, and orthogonal
//! transformations.
//!
//! Rotations act by conjugation with an orthogonal paravector `Λ`
//! (`det Λ = 1`): the left rotation is `Λ⁻ΓΛ`, the right rotation `ΛΓΛ⁻`.
//! The axis `{cos φ | i n sin φ}` turns real vectors by `2φ` about `n`.

use crate::algebra::{CVector3, ComplexScalar, Paravector};
use crate::error::{ParavectorError, Result};
use crate::products::Orientation;
use crate::tolerance::Tolerance;

/// An orthogonal paravector used as rotation axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationAxis {
    axis: Paravector,
}

impl RotationAxis {
    pub fn identity() -> Self {
        RotationAxis { axis: Paravector::ONE }
    }

    /// Normalizes any proper paravector.
    pub fn from_proper(p: &Paravector, tol: &Tolerance) -> Result<Self> {
        Ok(RotationAxis { axis: p.normalize(tol)? })
    }

    /// Wraps a paravector that already has determinant 1. Complex-valued
    /// orthogonal paravectors are accepted.
    pub fn from_orthogonal(p: &Paravector, tol: &Tolerance) -> Result<Self> {
        if is_orthogonal_transform(p, tol) {
            Ok(RotationAxis { axis: *p })
        } else {
            let det = p.det();
            Err(ParavectorError::NotOrthogonal { re: det.re, im: det.im })
        }
    }

    pub fn paravector(&self) -> Paravector {
        self.axis
    }
}

/// Rotation by `2φ` about the real unit vector `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialRotation {
    n: [f64; 3],
    phi: f64,
}

impl SpatialRotation {
    pub fn new(n: [f64; 3], phi: f64, tol: &Tolerance) -> Result<Self> {
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if !phi.is_finite() || !(norm - 1.0).abs().le(&tol.threshold(1.0)) {
            return Err(ParavectorError::BadUnitVector { norm });
        }
        Ok(SpatialRotation { n, phi })
    }

    pub fn axis_vector(&self) -> [f64; 3] {
        self.n
    }

    /// Half of the turning angle.
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Result of composing two spatial rotations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EulerComposition {
    Rotation(SpatialRotation),
    /// The product has no vector part, so its axis is undefined. `phi` is
    /// 0 or π, matching the sign of the product `{cos φ | 0}`.
    AxisUndefined { phi: f64 },
}

impl EulerComposition {
    pub fn axis(&self) -> RotationAxis {
        match self {
            EulerComposition::Rotation(r) => spatial_axis(r),
            EulerComposition::AxisUndefined { phi } => RotationAxis {
                axis: Paravector::raw(ComplexScalar::new(phi.cos(), 0.0), CVector3::ZERO),
            },
        }
    }

    pub fn phi(&self) -> f64 {
        match self {
            EulerComposition::Rotation(r) => r.phi,
            EulerComposition::AxisUndefined { phi } => *phi,
        }
    }
}

/// `F⁻¹ G F` for non-singular `F`.
pub fn similarity(g: &Paravector, f: &Paravector, tol: &Tolerance) -> Result<Paravector> {
    Ok(f.inverse(tol)? * *g * *f)
}

pub fn rotate(g: &Paravector, axis: &RotationAxis, orientation: Orientation) -> Paravector {
    let l = axis.axis;
    match orientation {
        Orientation::Left => l.rev() * *g * l,
        Orientation::Right => l * *g * l.rev(),
    }
}

/// `{cos φ | i n sin φ}`.
pub fn spatial_axis(r: &SpatialRotation) -> RotationAxis {
    let (sin, cos) = r.phi.sin_cos();
    RotationAxis {
        axis: Paravector::raw(
            ComplexScalar::new(cos, 0.0),
            CVector3::imaginary([r.n[0] * sin, r.n[1] * sin, r.n[2] * sin]),
        ),
    }
}

/// Rotates a real vector by embedding it as `{0 | w}` and applying the left
/// rotation with the spatial axis of `r`.
pub fn rotate_vector(w: [f64; 3], r: &SpatialRotation) -> [f64; 3] {
    let g = Paravector::raw(ComplexScalar::new(0.0, 0.0), CVector3::real(w));
    rotate(&g, &spatial_axis(r), Orientation::Left).vector().re()
}

/// Composes the axes of `r1` and `r2` as the product `Λ₁Λ₂` and reads the
/// result back as `{cos φ | i n sin φ}` with `φ ∈ [0, π)`.
pub fn euler_compose(r1: &SpatialRotation, r2: &SpatialRotation, tol: &Tolerance) -> EulerComposition {
    let product = spatial_axis(r1).axis * spatial_axis(r2).axis;
    let cos = product.scalar().re;
    let s = product.vector().im();
    let sin = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
    if sin <= tol.threshold(1.0) {
        let phi = if cos >= 0.0 { 0.0 } else { std::f64::consts::PI };
        return EulerComposition::AxisUndefined { phi };
    }
    EulerComposition::Rotation(SpatialRotation {
        n: [s[0] / sin, s[1] / sin, s[2] / sin],
        phi: sin.atan2(cos),
    })
}

fn non_isotropic(w: &CVector3, tol: &Tolerance) -> Result<ComplexScalar> {
    let ww = w.dot(w);
    if ww.norm() <= tol.threshold(w.norm().powi(2)) {
        return Err(ParavectorError::IsotropicNormal { re: ww.re, im: ww.im });
    }
    Ok(ww)
}

/// Generalized mirror symmetry `{0|w} G {0|w} / (-w·w)`. For `w = i n`
/// with real unit `n` this reflects in the plane with normal `n` and
/// flips the sign of the scalar.
pub fn mirror(g: &Paravector, w: &CVector3, tol: &Tolerance) -> Result<Paravector> {
    let ww = non_isotropic(w, tol)?;
    let wp = Paravector::raw(ComplexScalar::new(0.0, 0.0), *w);
    Ok((wp * *g * wp).scale(-ww.inv()))
}

/// Axis of the rotation equal to mirroring in `w1` followed by mirroring
/// in `w2`: `{w₁·w₂ | i w₁×w₂}` scaled to determinant 1. Applied with
/// [`Orientation::Left`].
pub fn compose_mirrors(w1: &CVector3, w2: &CVector3, tol: &Tolerance) -> Result<RotationAxis> {
    non_isotropic(w1, tol)?;
    non_isotropic(w2, tol)?;
    let dot = w1.dot(w2);
    let cross = w1.cross(w2);
    let norm = dot * dot + cross.dot(&cross);
    if norm.norm() <= tol.threshold((w1.norm() * w2.norm()).powi(2)) {
        return Err(ParavectorError::DegenerateComposition);
    }
    let axis = Paravector::raw(dot, cross * ComplexScalar::i()).scale(norm.sqrt().inv());
    Ok(RotationAxis { axis })
}

/// Straight-angle rotation about `w`: `{0|-iw} G {0|iw} / (w·w)`.
pub fn axial_symmetry(g: &Paravector, w: &CVector3, tol: &Tolerance) -> Result<Paravector> {
    let ww = non_isotropic(w, tol)?;
    let iw = Paravector::raw(ComplexScalar::new(0.0, 0.0), *w * ComplexScalar::i());
    Ok((iw.rev() * *g * iw).scale(ww.inv()))
}

/// An orthogonal transformation has determinant 1.
pub fn is_orthogonal_transform(l: &Paravector, tol: &Tolerance) -> bool {
    (l.det() - 1.0).norm() <= l.det_threshold(tol)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    use super::*;

    const TOL: Tolerance = Tolerance { abs: 1e-9, rel: 1e-9 };

    fn pv(c: [f64; 8]) -> Paravector {
        Paravector::from_components(c).unwrap()
    }

    fn e3_rotation(phi: f64) -> SpatialRotation {
        SpatialRotation::new([0.0, 0.0, 1.0], phi, &TOL).unwrap()
    }

    fn close3(a: [f64; 3], b: [f64; 3]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn similarity_examples() {
        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        let lambda = pv([2.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(similarity(&g, &lambda, &TOL).unwrap().approx_eq(&g, &TOL));

        let f = pv([0.3, 0.2, 1.0, -1.0, 0.5, 0.1, 0.0, 2.0]);
        let s = similarity(&g, &f, &TOL).unwrap();
        assert!((s.scalar() - g.scalar()).norm() < 1e-9);

        let t = FRAC_PI_4;
        let f = pv([t.cos(), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, t.sin()]);
        let e1 = pv([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let e2 = pv([0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(similarity(&e1, &f, &TOL).unwrap().approx_eq(&e2, &TOL));

        let singular = pv([1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(similarity(&g, &singular, &TOL).is_err());
    }

    #[test]
    fn rotate_examples() {
        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        assert_eq!(rotate(&g, &RotationAxis::identity(), Orientation::Left), g);

        let e1 = pv([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let e2 = pv([0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let axis = spatial_axis(&e3_rotation(FRAC_PI_4));
        assert!(rotate(&e1, &axis, Orientation::Left).approx_eq(&e2, &TOL));

        // spatially parallel to the axis: fixed
        let l = RotationAxis::from_proper(&pv([2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &TOL).unwrap();
        let h = pv([0.7, 0.3, -1.5, 0.0, 0.0, 0.4, 0.0, 0.0]);
        for o in [Orientation::Left, Orientation::Right] {
            assert!(rotate(&h, &l, o).approx_eq(&h, &TOL));
        }
    }

    #[test]
    fn axis_constructors() {
        assert!(RotationAxis::from_proper(&pv([1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &TOL).is_err());
        assert!(RotationAxis::from_orthogonal(&pv([2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &TOL).is_err());
        let l = RotationAxis::from_proper(&pv([2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &TOL).unwrap();
        assert!(is_orthogonal_transform(&l.paravector(), &TOL));
    }

    #[test]
    fn spatial_axis_examples() {
        assert_eq!(spatial_axis(&e3_rotation(0.0)).paravector(), Paravector::ONE);
        let half = spatial_axis(&e3_rotation(FRAC_PI_2)).paravector();
        assert!(half.approx_eq(&pv([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]), &TOL));
        let r = SpatialRotation::new([0.6, 0.0, 0.8], 1.234, &TOL).unwrap();
        assert!((spatial_axis(&r).paravector().det() - 1.0).norm() < 1e-12);
        assert!(matches!(
            SpatialRotation::new([1.0, 1.0, 0.0], 0.1, &TOL),
            Err(ParavectorError::BadUnitVector { .. })
        ));
    }

    #[test]
    fn rotate_vector_examples() {
        assert!(close3(rotate_vector([1.0, 0.0, 0.0], &e3_rotation(FRAC_PI_4)), [0.0, 1.0, 0.0]));
        assert!(close3(rotate_vector([0.0, 0.0, 2.5], &e3_rotation(0.7)), [0.0, 0.0, 2.5]));
        let w = [0.3, -1.2, 2.0];
        let r = SpatialRotation::new([0.0, 0.6, 0.8], 0.9, &TOL).unwrap();
        let out = rotate_vector(w, &r);
        let len = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        assert!((len(out) - len(w)).abs() < 1e-12);
    }

    #[test]
    fn euler_examples() {
        match euler_compose(&e3_rotation(FRAC_PI_4), &e3_rotation(FRAC_PI_4), &TOL) {
            EulerComposition::Rotation(r) => {
                assert!(close3(r.axis_vector(), [0.0, 0.0, 1.0]));
                assert!((r.phi() - FRAC_PI_2).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }

        let n = [0.0, 0.6, 0.8];
        let r1 = SpatialRotation::new(n, 0.4, &TOL).unwrap();
        let r2 = SpatialRotation::new(n, -0.4, &TOL).unwrap();
        let id = euler_compose(&r1, &r2, &TOL);
        assert_eq!(id, EulerComposition::AxisUndefined { phi: 0.0 });
        assert_eq!(id.axis().paravector(), Paravector::ONE);

        // {0|i e1}{0|i e2} = {0|-i e3}
        let x = SpatialRotation::new([1.0, 0.0, 0.0], FRAC_PI_2, &TOL).unwrap();
        let y = SpatialRotation::new([0.0, 1.0, 0.0], FRAC_PI_2, &TOL).unwrap();
        match euler_compose(&x, &y, &TOL) {
            EulerComposition::Rotation(r) => {
                assert!(close3(r.axis_vector(), [0.0, 0.0, -1.0]));
                assert!((r.phi() - FRAC_PI_2).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }

        let full = euler_compose(&e3_rotation(FRAC_PI_2), &e3_rotation(FRAC_PI_2), &TOL);
        assert_eq!(full, EulerComposition::AxisUndefined { phi: PI });
    }

    #[test]
    fn mirror_examples() {
        let g = pv([0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 2.0, 3.0]);
        let ie3 = CVector3::imaginary([0.0, 0.0, 1.0]);
        let m = mirror(&g, &ie3, &TOL).unwrap();
        assert!(m.approx_eq(&pv([0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 2.0, -3.0]), &TOL));

        let h = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        let n = CVector3::imaginary([0.6, 0.0, 0.8]);
        let twice = mirror(&mirror(&h, &n, &TOL).unwrap(), &n, &TOL).unwrap();
        assert!(twice.approx_eq(&h, &TOL));
        assert!((mirror(&h, &n, &TOL).unwrap().scalar() + h.scalar()).norm() < 1e-12);

        let isotropic = CVector3::from_parts([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        assert!(matches!(mirror(&h, &isotropic, &TOL), Err(ParavectorError::IsotropicNormal { .. })));
    }

    #[test]
    fn mirror_matches_reflection_formula() {
        // {0|in}{a|v}{0|in} = {-a | -n(v·n) + (n×v)×n}
        let n = [0.0, 0.6, 0.8];
        let v = [1.0, -2.0, 0.5];
        let a = 0.75;
        let g = pv([a, 0.0, v[0], v[1], v[2], 0.0, 0.0, 0.0]);
        let m = mirror(&g, &CVector3::imaginary(n), &TOL).unwrap();
        let vn = v[0] * n[0] + v[1] * n[1] + v[2] * n[2];
        let nv = CVector3::real(n).cross(&CVector3::real(v));
        let perp = nv.cross(&CVector3::real(n)).re();
        let expected: [f64; 3] = std::array::from_fn(|k| -n[k] * vn + perp[k]);
        assert!(m.approx_eq(&pv([-a, 0.0, expected[0], expected[1], expected[2], 0.0, 0.0, 0.0]), &TOL));
    }

    #[test]
    fn compose_mirrors_examples() {
        let e3 = CVector3::real([0.0, 0.0, 1.0]);
        let same = compose_mirrors(&e3, &e3, &TOL).unwrap();
        assert!(same.paravector().approx_eq(&Paravector::ONE, &TOL));

        let e1 = CVector3::real([1.0, 0.0, 0.0]);
        let e2 = CVector3::real([0.0, 1.0, 0.0]);
        let axis = compose_mirrors(&e1, &e2, &TOL).unwrap();
        assert!(axis.paravector().approx_eq(&pv([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]), &TOL));

        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        let seq = mirror(&mirror(&g, &e1, &TOL).unwrap(), &e2, &TOL).unwrap();
        assert!(rotate(&g, &axis, Orientation::Left).approx_eq(&seq, &TOL));

        let isotropic = CVector3::from_parts([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        assert!(compose_mirrors(&isotropic, &e1, &TOL).is_err());
    }

    #[test]
    fn axial_examples() {
        let e3 = CVector3::real([0.0, 0.0, 1.0]);
        let g = pv([0.4, 0.0, 1.0, 2.0, 3.0, 0.0, 0.0, 0.0]);
        let a = axial_symmetry(&g, &e3, &TOL).unwrap();
        assert!(a.approx_eq(&pv([0.4, 0.0, -1.0, -2.0, 3.0, 0.0, 0.0, 0.0]), &TOL));
        assert!(axial_symmetry(&a, &e3, &TOL).unwrap().approx_eq(&g, &TOL));
        let along = pv([0.4, 1.0, 0.0, 0.0, 2.0, 0.0, 0.0, -1.0]);
        assert!(axial_symmetry(&along, &e3, &TOL).unwrap().approx_eq(&along, &TOL));
    }

    #[test]
    fn orthogonal_transform_examples() {
        assert!(is_orthogonal_transform(&Paravector::ONE, &TOL));
        let a = pv([2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(!is_orthogonal_transform(&a, &TOL));
        assert!(is_orthogonal_transform(&a.normalize(&TOL).unwrap(), &TOL));
    }

    #[test]
    fn mirror_is_not_a_similarity() {
        let g = pv([1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let m = mirror(&g, &CVector3::imaginary([1.0, 0.0, 0.0]), &TOL).unwrap();
        assert!((m.scalar() - g.scalar()).norm() > 1.0);
    }
}
