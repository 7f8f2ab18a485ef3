//! Left and right integrated products and the scalar and vector products
//! derived from them.
//!
//! The right integrated product is `Γ₁Γ₂⁻`, the left one `Γ₁⁻Γ₂`. Both share
//! the scalar part `α₁α₂ - β₁·β₂` (the scalar product); their vector parts
//! are the right and left vector products.

use serde::Serialize;

use crate::algebra::{CVector3, ComplexScalar, Paravector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratedProduct {
    pub value: Paravector,
    pub orientation: Orientation,
}

impl IntegratedProduct {
    pub fn scalar(&self) -> ComplexScalar {
        self.value.scalar()
    }

    pub fn vector(&self) -> CVector3 {
        self.value.vector()
    }
}

pub fn integrated(a: &Paravector, b: &Paravector, orientation: Orientation) -> IntegratedProduct {
    let value = match orientation {
        Orientation::Right => a.mul(&b.rev()),
        Orientation::Left => a.rev().mul(b),
    };
    IntegratedProduct { value, orientation }
}

/// `⟨A, B⟩ = α₁α₂ - β₁·β₂`.
pub fn scalar_product(a: &Paravector, b: &Paravector) -> ComplexScalar {
    a.scalar() * b.scalar() - a.vector().dot(&b.vector())
}

/// Vector part of the integrated product of the given orientation.
pub fn vector_product(a: &Paravector, b: &Paravector, orientation: Orientation) -> CVector3 {
    integrated(a, b, orientation).vector()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::tolerance::Tolerance;

    const TOL: Tolerance = Tolerance { abs: 1e-9, rel: 1e-9 };

    fn pv(c: [f64; 8]) -> Paravector {
        Paravector::from_components(c).unwrap()
    }

    fn any_paravector() -> impl Strategy<Value = Paravector> {
        prop::array::uniform8(-2.0f64..2.0).prop_map(pv)
    }

    fn any_orientation() -> impl Strategy<Value = Orientation> {
        prop_oneof![Just(Orientation::Left), Just(Orientation::Right)]
    }

    fn e1p() -> Paravector {
        pv([1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    fn e2p() -> Paravector {
        pv([1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0])
    }

    #[test]
    fn integrated_examples() {
        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        let self_product = integrated(&g, &g, Orientation::Right).value;
        assert!(self_product.approx_eq(&Paravector::from_scalar(g.det()).unwrap(), &TOL));

        let right = integrated(&e1p(), &e2p(), Orientation::Right);
        assert_eq!(right.value, pv([1.0, 0.0, 1.0, -1.0, 0.0, 0.0, 0.0, -1.0]));
        let left = integrated(&e1p(), &e2p(), Orientation::Left);
        assert_eq!(left.value, pv([1.0, 0.0, -1.0, 1.0, 0.0, 0.0, 0.0, -1.0]));
        assert_eq!(left.orientation, Orientation::Left);
    }

    #[test]
    fn scalar_product_examples() {
        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        assert_eq!(scalar_product(&g, &g), g.det());
        let s = scalar_product(&e1p(), &e2p());
        assert_eq!(s, ComplexScalar::new(1.0, 0.0));
        assert_eq!(s, integrated(&e1p(), &e2p(), Orientation::Right).scalar());
        let e1 = pv([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(scalar_product(&Paravector::ONE, &e1), ComplexScalar::new(0.0, 0.0));
    }

    #[test]
    fn vector_product_examples() {
        let g = pv([0.5, -1.0, 1.0, 0.25, 2.0, 0.0, -1.5, 1.0]);
        assert!(vector_product(&g, &g, Orientation::Right).max_abs() < 1e-12);
        assert_eq!(
            vector_product(&e1p(), &e2p(), Orientation::Right),
            CVector3::from_parts([1.0, -1.0, 0.0], [0.0, 0.0, -1.0])
        );
        let e1 = pv([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let e2 = pv([0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            vector_product(&e1, &e2, Orientation::Right),
            CVector3::imaginary([0.0, 0.0, -1.0])
        );
    }

    #[test]
    fn zero_scalar_product_implies_singular() {
        let g = pv([1.0, 0.0, 0.6, 0.8, 0.0, 0.0, 0.0, 0.0]);
        assert!(scalar_product(&g, &g).norm() < 1e-12);
        assert!(g.classify(&TOL).is_singular);
    }

    proptest! {
        #[test]
        fn additivity(a in any_paravector(), b in any_paravector(), c in any_paravector(), o in any_orientation()) {
            let lhs = integrated(&(a + b), &c, o).value;
            let rhs = integrated(&a, &c, o).value + integrated(&b, &c, o).value;
            prop_assert!(lhs.approx_eq_scaled(&rhs, &TOL, 16.0));
        }

        #[test]
        fn homogeneity(a in any_paravector(), b in any_paravector(), re in -2.0f64..2.0, im in -2.0f64..2.0, o in any_orientation()) {
            let k = ComplexScalar::new(re, im);
            let base = integrated(&a, &b, o).value.scale(k);
            prop_assert!(integrated(&a.scale(k), &b, o).value.approx_eq_scaled(&base, &TOL, 64.0));
            prop_assert!(integrated(&a, &b.scale(k), o).value.approx_eq_scaled(&base, &TOL, 64.0));
        }

        #[test]
        fn reversal_swaps_operands(a in any_paravector(), b in any_paravector(), o in any_orientation()) {
            let lhs = integrated(&a, &b, o).value.rev();
            prop_assert!(lhs.approx_eq_scaled(&integrated(&b, &a, o).value, &TOL, 16.0));
        }

        #[test]
        fn det_of_integrated_product(a in any_paravector(), b in any_paravector(), o in any_orientation()) {
            let ip = integrated(&a, &b, o);
            let expected = a.det() * b.det();
            prop_assert!((ip.value.det() - expected).norm() <= TOL.threshold(256.0));
            let s = ip.scalar();
            let v = ip.vector();
            prop_assert!((s * s - v.dot(&v) - expected).norm() <= TOL.threshold(256.0));
        }

        #[test]
        fn scalar_product_symmetric_and_shared(a in any_paravector(), b in any_paravector()) {
            prop_assert_eq!(scalar_product(&a, &b), scalar_product(&b, &a));
            let r = integrated(&a, &b, Orientation::Right).scalar();
            let l = integrated(&a, &b, Orientation::Left).scalar();
            prop_assert!((r - l).norm() <= TOL.threshold(16.0));
            prop_assert!((r - scalar_product(&a, &b)).norm() <= TOL.threshold(16.0));
        }

        // The cross-orientation identity (Γ₁,Γ₂} = -⟨Γ₁,Γ₂)ᵥ* only holds for real components.
        #[test]
        fn cross_orientation_identity_on_real_paravectors(a in prop::array::uniform4(-2.0f64..2.0), b in prop::array::uniform4(-2.0f64..2.0)) {
            let a = pv([a[0], 0.0, a[1], a[2], a[3], 0.0, 0.0, 0.0]);
            let b = pv([b[0], 0.0, b[1], b[2], b[3], 0.0, 0.0, 0.0]);
            let right = vector_product(&a, &b, Orientation::Right);
            let left = vector_product(&a, &b, Orientation::Left);
            prop_assert!((right + left.conj()).max_abs() <= TOL.threshold(16.0));
        }

        #[test]
        fn spatial_paravectors_reduce_to_dot(w1 in prop::array::uniform3(-2.0f64..2.0), w2 in prop::array::uniform3(-2.0f64..2.0)) {
            let dot = w1[0] * w2[0] + w1[1] * w2[1] + w1[2] * w2[2];
            let real = |w: [f64; 3]| Paravector::from_vector(CVector3::real(w)).unwrap();
            let imag = |w: [f64; 3]| Paravector::from_vector(CVector3::imaginary(w)).unwrap();
            prop_assert!((scalar_product(&real(w1), &real(w2)) + dot).norm() < 1e-12);
            prop_assert!((scalar_product(&imag(w1), &imag(w2)) - dot).norm() < 1e-12);
        }
    }
}
