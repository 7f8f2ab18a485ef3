use std::f64::consts::{FRAC_PI_2, PI};

use super::{Check, Context, Property, TrialRng};
use crate::algebra::{CVector3, ComplexScalar, Paravector};
use crate::geometry::{
    angle, compose_angles, explement, is_parallel, is_perpendicular, is_spatially_parallel, scalar_multiple, Angle,
};
use crate::matrix::{from_matrix4, to_pauli, Matrix2, Matrix4};
use crate::products::{integrated, scalar_product, Orientation};
use crate::tolerance::Tolerance;
use crate::transforms::{
    axial_symmetry, compose_mirrors, is_orthogonal_transform, mirror, rotate, rotate_vector, similarity, spatial_axis,
    RotationAxis, SpatialRotation,
};

type C = ComplexScalar;

const ORIENTATIONS: [Orientation; 2] = [Orientation::Left, Orientation::Right];

macro_rules! ensure {
    ($cond:expr, $($input:expr),+ $(,)?) => {
        if !$cond {
            return Check::Fail(vec![$($input),+]);
        }
    };
}

/// Unwraps a precondition-guarded result, skipping the trial on error.
macro_rules! or_skip {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(_) => return Check::Skip,
        }
    };
}

pub(super) static ALL: &[Property] = &[
    Property { name: "ring.add", check: ring_add },
    Property { name: "ring.mul_associative", check: ring_mul_associative },
    Property { name: "ring.distributive", check: ring_distributive },
    Property { name: "ring.mul_identity", check: ring_mul_identity },
    Property { name: "involution.table", check: involution_table },
    Property { name: "det.multiplicative", check: det_multiplicative },
    Property { name: "det.closed_form", check: det_closed_form },
    Property { name: "vigor.closed_form", check: vigor_closed_form },
    Property { name: "algebra.structure", check: algebra_structure },
    Property { name: "products.determinant_identity", check: products_determinant_identity },
    Property { name: "products.bilinearity", check: products_bilinearity },
    Property { name: "products.scalar_symmetric", check: products_scalar_symmetric },
    Property { name: "geometry.parallel_scalar_multiple", check: geometry_parallel },
    Property { name: "geometry.perpendicular_laws", check: geometry_perpendicular },
    Property { name: "geometry.polarization_parallelogram", check: geometry_polarization },
    Property { name: "geometry.orthogonal_parallel", check: geometry_orthogonal_parallel },
    Property { name: "geometry.angle_laws", check: geometry_angle_laws },
    Property { name: "transforms.rotation_invariants", check: transforms_rotation },
    Property { name: "transforms.rodrigues", check: transforms_rodrigues },
    Property { name: "transforms.angle_decomposition", check: transforms_angle_decomposition },
    Property { name: "transforms.mirror", check: transforms_mirror },
    Property { name: "transforms.axial", check: transforms_axial },
    Property { name: "transforms.similarity_equivalence", check: transforms_similarity },
    Property { name: "matrix.homomorphism", check: matrix_homomorphism },
    Property { name: "matrix.oracles", check: matrix_oracles },
    Property { name: "matrix.pauli", check: matrix_pauli },
    Property { name: "orthogonal.integrated_preserved", check: orthogonal_integrated },
    Property { name: "orthogonal.vigor_preservation", check: orthogonal_vigor },
    Property { name: "orthogonal.sphere_invariance", check: orthogonal_sphere },
];

/// Magnitude of an operand for error scaling, floored at 1.
fn mag(p: &Paravector) -> f64 {
    p.max_abs().max(1.0)
}

fn mags(ps: &[&Paravector]) -> f64 {
    ps.iter().map(|p| mag(p)).product()
}

fn vmag(v: &CVector3) -> f64 {
    v.max_abs().max(1.0)
}

fn pv(s: C, v: CVector3) -> Paravector {
    Paravector::raw(s, v)
}

fn vec_pv(v: CVector3) -> Paravector {
    Paravector::raw(C::new(0.0, 0.0), v)
}

fn scalar_pv(s: C) -> Paravector {
    Paravector::raw(s, CVector3::ZERO)
}

fn close(tol: &Tolerance, x: &Paravector, y: &Paravector, scale: f64) -> bool {
    x.approx_eq_scaled(y, tol, scale)
}

fn close_c(tol: &Tolerance, x: C, y: C, scale: f64) -> bool {
    tol.close(x.re, y.re, scale) && tol.close(x.im, y.im, scale)
}

fn close_v(tol: &Tolerance, x: &CVector3, y: &CVector3, scale: f64) -> bool {
    close(tol, &vec_pv(*x), &vec_pv(*y), scale)
}

/// Nonzero complex factor bounded away from 0.
fn factor(rng: &mut TrialRng) -> C {
    loop {
        let k = rng.complex();
        if k.norm() > 0.1 {
            return k;
        }
    }
}

/// Determinant-1 paravector: real boost-rotation products half the time,
/// otherwise a random paravector divided by the principal root of its
/// determinant.
fn any_orthogonal(rng: &mut TrialRng) -> Option<Paravector> {
    if rng.unit() < 0.5 {
        return Some(rng.orthogonal());
    }
    let p = rng.uniform_paravector();
    let det = p.det();
    (det.norm() > 0.05).then(|| p.scale(det.sqrt().inv()))
}

fn ring_add(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b, c) = (rng.paravector(), rng.paravector(), rng.paravector());
    let t = &cx.tol;
    let s = mag(&a) + mag(&b) + mag(&c);
    ensure!(close(t, &((a + b) + c), &(a + (b + c)), s), a, b, c);
    ensure!(close(t, &(a + b), &(b + a), s), a, b);
    ensure!(close(t, &(a + Paravector::ZERO), &a, s), a);
    ensure!(close(t, &(a + (-a)), &Paravector::ZERO, s), a);
    Check::Pass
}

fn ring_mul_associative(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b, c) = (rng.paravector(), rng.paravector(), rng.paravector());
    let m = cx.ops.mul;
    let s = mags(&[&a, &b, &c]);
    ensure!(close(&cx.tol, &m(&m(&a, &b), &c), &m(&a, &m(&b, &c)), s), a, b, c);
    Check::Pass
}

fn ring_distributive(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b, c) = (rng.paravector(), rng.paravector(), rng.paravector());
    let k = rng.complex();
    let (m, t) = (cx.ops.mul, &cx.tol);
    let s = 2.0 * mags(&[&a, &b, &c]);
    ensure!(close(t, &m(&a, &(b + c)), &(m(&a, &b) + m(&a, &c)), s), a, b, c);
    ensure!(close(t, &m(&(a + b), &c), &(m(&a, &c) + m(&b, &c)), s), a, b, c);
    let ab = m(&a, &b).scale(k);
    let s = s * k.norm().max(1.0);
    ensure!(close(t, &m(&a.scale(k), &b), &ab, s), a, b, scalar_pv(k));
    ensure!(close(t, &m(&a, &b.scale(k)), &ab, s), a, b, scalar_pv(k));
    Check::Pass
}

fn ring_mul_identity(rng: &mut TrialRng, cx: &Context) -> Check {
    let a = rng.paravector();
    let (m, t, s) = (cx.ops.mul, &cx.tol, mag(&a));
    ensure!(close(t, &m(&Paravector::ONE, &a), &a, s), a);
    ensure!(close(t, &m(&a, &Paravector::ONE), &a, s), a);
    ensure!(close(t, &m(&Paravector::ZERO, &a), &Paravector::ZERO, s), a);
    ensure!(close(t, &m(&a, &Paravector::ZERO), &Paravector::ZERO, s), a);
    Check::Pass
}

fn involution_table(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let (m, rev, t) = (cx.ops.mul, cx.ops.rev, &cx.tol);
    let s = mag(&a) + mag(&b);
    ensure!(close(t, &rev(&rev(&a)), &a, s), a);
    ensure!(close(t, &a.conj().conj(), &a, s), a);
    ensure!(close(t, &rev(&(a + b)), &(rev(&a) + rev(&b)), s), a, b);
    ensure!(close(t, &(a + b).conj(), &(a.conj() + b.conj()), s), a, b);
    ensure!(close(t, &rev(&a).conj(), &rev(&a.conj()), s), a);
    let s = mags(&[&a, &b]);
    ensure!(close(t, &rev(&m(&a, &b)), &m(&rev(&b), &rev(&a)), s), a, b);
    ensure!(close(t, &m(&a, &b).conj(), &m(&b.conj(), &a.conj()), s), a, b);
    Check::Pass
}

fn det_multiplicative(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let (m, rev, t) = (cx.ops.mul, cx.ops.rev, &cx.tol);
    let s = mags(&[&a, &b]).powi(2);
    ensure!(close_c(t, m(&a, &b).det(), a.det() * b.det(), s), a, b);
    let sa = mag(&a).powi(2);
    ensure!(close_c(t, rev(&a).det(), a.det(), sa), a);
    ensure!(close_c(t, a.conj().det(), a.det().conj(), sa), a);
    let norm = scalar_pv(a.det());
    ensure!(close(t, &m(&a, &rev(&a)), &norm, sa), a);
    ensure!(close(t, &m(&rev(&a), &a), &norm, sa), a);
    Check::Pass
}

fn det_closed_form(rng: &mut TrialRng, cx: &Context) -> Check {
    let p = rng.paravector();
    let [a, d, bx, by, bz, cx_, cy, cz] = p.to_components();
    let bb = bx * bx + by * by + bz * bz;
    let cc = cx_ * cx_ + cy * cy + cz * cz;
    let bc = bx * cx_ + by * cy + bz * cz;
    let expected = C::new(a * a - bb + cc - d * d, 2.0 * (a * d - bc));
    let s = mag(&p).powi(2);
    let t = &cx.tol;
    ensure!(close_c(t, p.det(), expected, s), p);
    ensure!(close(t, &(cx.ops.mul)(&p, &(cx.ops.rev)(&p)), &scalar_pv(expected), s), p);
    Check::Pass
}

fn vigor_closed_form(rng: &mut TrialRng, cx: &Context) -> Check {
    let p = rng.paravector();
    let [a, d, bx, by, bz, cx_, cy, cz] = p.to_components();
    let (b, c) = ([bx, by, bz], [cx_, cy, cz]);
    let scalar = a * a + d * d + bx * bx + by * by + bz * bz + cx_ * cx_ + cy * cy + cz * cz;
    let vector: [f64; 3] = std::array::from_fn(|k| {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        2.0 * (a * b[k] + d * c[k] + b[i] * c[j] - b[j] * c[i])
    });
    let expected = pv(C::new(scalar, 0.0), CVector3::real(vector));
    let s = mag(&p).powi(2);
    let t = &cx.tol;
    ensure!(close(t, &p.vigor(), &expected, s), p);
    ensure!(close(t, &(cx.ops.mul)(&p, &p.conj()), &expected, s), p);
    ensure!(scalar >= 0.0 && (scalar == 0.0) == (p == Paravector::ZERO), p);
    Check::Pass
}

/// Classification consistency, special and orthogonal paravectors, module,
/// inverse and singular absorption.
fn algebra_structure(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let p = rng.paravector();
    let class = p.classify(t);
    ensure!(class.is_singular == (p.det().norm() <= t.threshold(p.max_abs().powi(2))), p);
    ensure!(!(class.is_singular && class.is_proper), p);
    ensure!(!class.is_orthogonal || class.is_proper, p);

    if let Ok(inv) = p.inverse(t) {
        let s = mag(&p) * mag(&inv);
        ensure!(close(t, &(p * inv), &Paravector::ONE, s), p);
        ensure!(close(t, &(inv * p), &Paravector::ONE, s), p);
    } else {
        ensure!(class.is_singular, p);
    }

    let (x, y) = (rng.special(), rng.special());
    let (sum, prod) = (x + y, x * y);
    ensure!(sum.classify(t).is_special && prod.classify(t).is_special, x, y);
    if x != Paravector::ZERO {
        ensure!(x.inverse(t).is_ok(), x);
    }

    let l = rng.orthogonal();
    ensure!(close(t, &or_skip!(l.inverse(t)), &l.rev(), mag(&l).powi(2)), l);

    let singular = rng.sphere_point();
    let q = rng.paravector();
    let s = (mag(&singular) * mag(&q)).powi(2);
    ensure!(t.is_zero((singular * q).det().norm(), s), singular, q);
    ensure!(t.is_zero((q * singular).det().norm(), s), singular, q);

    let (g1, g2) = (rng.proper(), rng.proper());
    let m1 = or_skip!(g1.module(t));
    let m2 = or_skip!(g2.module(t));
    let m12 = or_skip!((g1 * g2).module(t));
    ensure!(t.close(m12, m1 * m2, mags(&[&g1, &g2])), g1, g2);
    let k = rng.uniform(-2.0, 2.0);
    let mk = or_skip!((g1 * k).module(t));
    ensure!(t.close(mk, k.abs() * m1, mag(&g1) * k.abs().max(1.0)), g1);
    Check::Pass
}

fn products_determinant_identity(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let t = &cx.tol;
    let s = mags(&[&a, &b]).powi(2);
    let dd = a.det() * b.det();
    for o in ORIENTATIONS {
        let ip = integrated(&a, &b, o);
        let v = ip.vector();
        ensure!(close_c(t, ip.scalar() * ip.scalar() - v.dot(&v), dd, s), a, b);
        ensure!(close_c(t, ip.value.det(), dd, s), a, b);
    }
    let (r, l) = (integrated(&a, &b, Orientation::Right), integrated(&a, &b, Orientation::Left));
    ensure!(close_c(t, r.scalar(), l.scalar(), mags(&[&a, &b])), a, b);
    Check::Pass
}

fn products_bilinearity(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b, c) = (rng.paravector(), rng.paravector(), rng.paravector());
    let k = rng.complex();
    let t = &cx.tol;
    let s = 2.0 * mags(&[&a, &b, &c]) * k.norm().max(1.0);
    for o in ORIENTATIONS {
        let ip = |x: &Paravector, y: &Paravector| integrated(x, y, o).value;
        ensure!(close(t, &ip(&(a + b), &c), &(ip(&a, &c) + ip(&b, &c)), s), a, b, c);
        ensure!(close(t, &ip(&c, &(a + b)), &(ip(&c, &a) + ip(&c, &b)), s), a, b, c);
        let scaled = ip(&a, &b).scale(k);
        ensure!(close(t, &ip(&a.scale(k), &b), &scaled, s), a, b, scalar_pv(k));
        ensure!(close(t, &ip(&a, &b.scale(k)), &scaled, s), a, b, scalar_pv(k));
        ensure!(close(t, &ip(&a, &b).rev(), &ip(&b, &a), s), a, b);
    }
    Check::Pass
}

fn products_scalar_symmetric(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let t = &cx.tol;
    let s = mags(&[&a, &b]);
    ensure!(close_c(t, scalar_product(&a, &b), scalar_product(&b, &a), s), a, b);
    ensure!(close_c(t, scalar_product(&a, &a), a.det(), mag(&a).powi(2)), a);
    ensure!(close_c(t, integrated(&a, &b, Orientation::Right).scalar(), scalar_product(&a, &b), s), a, b);

    let real = |p: &Paravector| pv(C::new(p.scalar().re, 0.0), CVector3::real(p.vector().re()));
    let (ar, br) = (real(&a), real(&b));
    let right = integrated(&ar, &br, Orientation::Right).vector();
    let left = integrated(&ar, &br, Orientation::Left).vector();
    ensure!(close_v(t, &(right + left.conj()), &CVector3::ZERO, s), ar, br);

    let (u, w) = (rng.real3(), rng.real3());
    let euclid = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
    let s = vmag(&CVector3::real(u)) * vmag(&CVector3::real(w));
    let (ru, rw) = (vec_pv(CVector3::real(u)), vec_pv(CVector3::real(w)));
    ensure!(close_c(t, scalar_product(&ru, &rw), C::new(-euclid, 0.0), s), ru, rw);
    let (iu, iw) = (vec_pv(CVector3::imaginary(u)), vec_pv(CVector3::imaginary(w)));
    ensure!(close_c(t, scalar_product(&iu, &iw), C::new(euclid, 0.0), s), iu, iw);
    Check::Pass
}

fn geometry_parallel(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let (a, b) = rng.pair();
    let parallel = or_skip!(is_parallel(&a, &b, t));
    ensure!(parallel == scalar_multiple(&a, &b, t).is_some(), a, b);
    if parallel {
        ensure!(is_spatially_parallel(&a, &b, t), a, b);
    }

    let (k1, k2) = (factor(rng), factor(rng));
    let (b1, b2) = (a.scale(k1), a.scale(k1 * k2));
    ensure!(or_skip!(is_parallel(&a, &b1, t)), a, b1);
    ensure!(or_skip!(is_parallel(&b1, &a, t)), a, b1);
    ensure!(or_skip!(is_parallel(&a, &b2, t)), a, b2);
    ensure!(or_skip!(is_parallel(&a, &a, t)), a);
    let lambda = scalar_multiple(&b1, &a, t);
    ensure!(lambda.is_some_and(|l| close_c(t, l, k1, k1.norm())), a, b1);
    ensure!(is_spatially_parallel(&a, &b1, t), a, b1);
    ensure!(or_skip!(is_parallel(&a.conj(), &b1.conj(), t)), a, b1);
    if let Ok(vig) = is_parallel(&a.vigor(), &b1.vigor(), t) {
        ensure!(vig, a, b1);
    }
    Check::Pass
}

fn geometry_perpendicular(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let a = rng.proper();
    let c = rng.paravector();
    // remove the component of c along a
    let b = c - a.scale(scalar_product(&c, &a) / a.det());
    if b.is_singular(t) {
        return Check::Skip;
    }
    ensure!(is_perpendicular(&a, &b, t) == Ok(true), a, b);
    ensure!(is_perpendicular(&b, &a, t) == Ok(true), a, b);
    ensure!(is_perpendicular(&a, &a, t) == Ok(false), a);
    ensure!(is_perpendicular(&b, &b, t) == Ok(false), b);
    let k = factor(rng);
    ensure!(is_perpendicular(&b, &a.scale(k), t) == Ok(true), a, b);
    ensure!(is_perpendicular(&a.conj(), &b.conj(), t) == Ok(true), a, b);
    let s = (mag(&a) + mag(&b)).powi(2);
    ensure!(close_c(t, (a + b).det(), a.det() + b.det(), s), a, b);

    let p = rng.paravector();
    let self_perp = scalar_product(&p, &p).norm() <= t.threshold(p.max_abs().powi(2));
    ensure!(self_perp == p.is_singular(t), p);
    Check::Pass
}

fn geometry_polarization(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let t = &cx.tol;
    let s = (mag(&a) + mag(&b)).powi(2);
    let polar = a.det() + scalar_product(&a, &b) * 2.0 + b.det();
    ensure!(close_c(t, (a + b).det(), polar, s), a, b);
    let parallelogram = (a.det() + b.det()) * 2.0;
    ensure!(close_c(t, (a + b).det() + (a - b).det(), parallelogram, s), a, b);
    Check::Pass
}

fn geometry_orthogonal_parallel(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let Some(l1) = any_orthogonal(rng) else { return Check::Skip };
    let Some(l2) = any_orthogonal(rng) else { return Check::Skip };
    let s = mag(&l1) + mag(&l2);
    let same = close(t, &l1, &l2, s) || close(t, &l1, &-l2, s);
    ensure!(or_skip!(is_parallel(&l1, &l2, t)) == same, l1, l2);
    ensure!(or_skip!(is_parallel(&l1, &-l1, t)), l1);
    // the only determinant-1 multiples of l1 are ±l1
    let k = factor(rng);
    let unit = l1.scale(k / (k * k).sqrt());
    ensure!(close(t, &unit, &l1, mag(&l1)) || close(t, &unit, &-l1, mag(&l1)), l1);
    Check::Pass
}

fn geometry_angle_laws(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let (a, b, c) = (rng.proper(), rng.proper(), rng.proper());
    for o in ORIENTATIONS {
        let p = or_skip!(angle(&a, &b, o, t));
        let q = or_skip!(angle(&b, &c, o, t));
        let (sp, sq) = (mag(&p.value), mag(&q.value));
        ensure!(close_c(t, p.value.det(), C::new(1.0, 0.0), sp * sp), a, b);
        ensure!(close(t, &explement(&p).value, &or_skip!(angle(&b, &a, o, t)).value, sp), a, b);
        ensure!(explement(&explement(&p)) == p, a, b);
        ensure!(explement(&p).cosinis() == p.cosinis(), a, b);
        let id = or_skip!(compose_angles(&p, &Angle::identity(o)));
        ensure!(close(t, &id.value, &p.value, sp), a, b);

        let r = or_skip!(compose_angles(&p, &q));
        let (pv_, qv) = (p.value.vector(), q.value.vector());
        let cos = p.cosinis() * q.cosinis() + pv_.dot(&qv);
        let vec = qv * p.cosinis() + pv_ * q.cosinis() + pv_.cross(&qv) * C::i();
        ensure!(close(t, &r.value, &pv(cos, vec), sp * sq), a, b, c);
        ensure!(close_c(t, r.value.det(), C::new(1.0, 0.0), (sp * sq).powi(2)), a, b, c);

        let d = or_skip!(compose_angles(&p, &p));
        let cos2 = p.cosinis() * p.cosinis() + pv_.dot(&pv_);
        let vec2 = pv_ * (p.cosinis() * 2.0);
        ensure!(close(t, &d.value, &pv(cos2, vec2), sp * sp), a, b);
    }
    let left = or_skip!(angle(&a, &b, Orientation::Left, t));
    let right = or_skip!(angle(&a, &b, Orientation::Right, t));
    ensure!(compose_angles(&left, &right).is_err(), a, b);
    Check::Pass
}

fn transforms_rotation(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let f = rng.proper();
    let axis = or_skip!(RotationAxis::from_proper(&f, t));
    let l = axis.paravector();
    let g = rng.paravector();
    let s = mag(&l).powi(2) * mag(&g);
    let k = rng.uniform(0.1, 2.0) * if rng.unit() < 0.5 { -1.0 } else { 1.0 };
    let rescaled = or_skip!(RotationAxis::from_proper(&(f * k), t));
    ensure!(is_orthogonal_transform(&l, t), f);
    // g sharing the axis direction
    let h = pv(rng.complex(), l.vector().scale(rng.complex()));
    for o in ORIENTATIONS {
        let r = rotate(&g, &axis, o);
        ensure!(close_c(t, r.det(), g.det(), s * s), f, g);
        ensure!(close_c(t, r.scalar(), g.scalar(), s), f, g);
        ensure!(close(t, &rotate(&g, &rescaled, o), &r, s), f, g);
        ensure!(close(t, &rotate(&h, &axis, o), &h, mag(&l).powi(2) * mag(&h)), f, h);
    }
    Check::Pass
}

/// Rotation of `w` by `theta` about the unit vector `n`.
fn rodrigues(w: [f64; 3], n: [f64; 3], theta: f64) -> [f64; 3] {
    let (sin, cos) = theta.sin_cos();
    let dot = n[0] * w[0] + n[1] * w[1] + n[2] * w[2];
    let cross = [n[1] * w[2] - n[2] * w[1], n[2] * w[0] - n[0] * w[2], n[0] * w[1] - n[1] * w[0]];
    std::array::from_fn(|i| w[i] * cos + cross[i] * sin + n[i] * dot * (1.0 - cos))
}

fn transforms_rodrigues(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let n = rng.unit_vector();
    let phi = rng.uniform(-PI, PI);
    let w = rng.real3();
    let r = or_skip!(SpatialRotation::new(n, phi, t));
    let inputs = || vec![vec_pv(CVector3::real(w)), pv(C::new(phi, 0.0), CVector3::real(n))];
    let got = rotate_vector(w, &r);
    let want = rodrigues(w, n, 2.0 * phi);
    let s = vmag(&CVector3::real(w));
    if !(0..3).all(|i| t.close(got[i], want[i], s)) {
        return Check::Fail(inputs());
    }
    let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if !t.close(norm(got), norm(w), s) {
        return Check::Fail(inputs());
    }
    let along = rotate_vector(n, &r);
    if !(0..3).all(|i| t.close(along[i], n[i], 1.0)) {
        return Check::Fail(inputs());
    }
    Check::Pass
}

fn transforms_angle_decomposition(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let g = rng.proper();
    let l = rng.orthogonal();
    let axis = or_skip!(RotationAxis::from_orthogonal(&l, t));
    let rotated = rotate(&g, &axis, Orientation::Left);
    let lhs = or_skip!(angle(&g, &rotated, Orientation::Right, t)).value;
    let right = or_skip!(angle(&g, &l, Orientation::Right, t)).value;
    let left = or_skip!(angle(&g, &l, Orientation::Left, t)).value;
    let rhs = (cx.ops.mul)(&right, &left);
    ensure!(close(t, &lhs, &rhs, mags(&[&right, &left])), g, l);
    Check::Pass
}

/// `(w×β)×w`
fn double_cross(w: &CVector3, beta: &CVector3) -> CVector3 {
    w.cross(beta).cross(w)
}

fn transforms_mirror(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let g = rng.paravector();
    let (alpha, beta) = (g.scalar(), g.vector());

    let n = CVector3::real(rng.unit_vector());
    let plane = or_skip!(mirror(&g, &(n * C::i()), t));
    let reflected = pv(-alpha, n.scale(-beta.dot(&n)) + double_cross(&n, &beta));
    ensure!(close(t, &plane, &reflected, mag(&g)), g, vec_pv(n));
    ensure!(close(t, &or_skip!(mirror(&plane, &(n * C::i()), t)), &g, mag(&g)), g, vec_pv(n));

    let w = rng.cvector();
    let ww = w.dot(&w);
    let m = or_skip!(mirror(&g, &w, t));
    let cond = vmag(&w).powi(2) / ww.norm();
    let s = mag(&g) * cond;
    let general = pv(-alpha, (w.scale(-beta.dot(&w)) + double_cross(&w, &beta)).scale(ww.inv()));
    ensure!(close(t, &m, &general, s), g, vec_pv(w));
    ensure!(close(t, &or_skip!(mirror(&m, &w, t)), &g, s * cond), g, vec_pv(w));

    let w2 = rng.cvector();
    let axis = or_skip!(compose_mirrors(&w, &w2, t));
    let cond2 = vmag(&w2).powi(2) / w2.dot(&w2).norm();
    let sequential = or_skip!(mirror(&m, &w2, t));
    let s = mag(&g) * cond * cond2 * mag(&axis.paravector()).powi(2);
    ensure!(close(t, &rotate(&g, &axis, Orientation::Left), &sequential, s), g, vec_pv(w), vec_pv(w2));
    Check::Pass
}

fn transforms_axial(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let g = rng.paravector();
    let (alpha, beta) = (g.scalar(), g.vector());
    let w = rng.cvector();
    let ww = w.dot(&w);
    let x = or_skip!(axial_symmetry(&g, &w, t));
    let cond = vmag(&w).powi(2) / ww.norm();
    let s = mag(&g) * cond;
    let expected = pv(alpha, (w.scale(beta.dot(&w)) - double_cross(&w, &beta)).scale(ww.inv()));
    ensure!(close(t, &x, &expected, s), g, vec_pv(w));
    ensure!(close(t, &or_skip!(axial_symmetry(&x, &w, t)), &g, s * cond), g, vec_pv(w));
    let h = pv(rng.complex(), w.scale(rng.complex()));
    ensure!(close(t, &or_skip!(axial_symmetry(&h, &w, t)), &h, mag(&h) * cond), h, vec_pv(w));

    let n = rng.unit_vector();
    let r = or_skip!(SpatialRotation::new(n, FRAC_PI_2, t));
    let straight = rotate(&g, &spatial_axis(&r), Orientation::Left);
    let nv = CVector3::real(n);
    ensure!(close(t, &or_skip!(axial_symmetry(&g, &nv, t)), &straight, mag(&g)), g, vec_pv(nv));
    Check::Pass
}

fn transforms_similarity(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let (f1, f2, g) = (rng.paravector(), rng.paravector(), rng.paravector());
    let i1 = or_skip!(f1.inverse(t));
    let i2 = or_skip!(f2.inverse(t));
    let s1 = or_skip!(similarity(&g, &f1, t));
    let c1 = mags(&[&f1, &i1, &g]);
    ensure!(close_c(t, s1.scalar(), g.scalar(), c1), g, f1);
    ensure!(close(t, &or_skip!(similarity(&g, &Paravector::ONE, t)), &g, mag(&g)), g);
    ensure!(close(t, &or_skip!(similarity(&s1, &i1, t)), &g, c1 * mags(&[&f1, &i1])), g, f1);
    let chained = or_skip!(similarity(&s1, &f2, t));
    let direct = or_skip!(similarity(&g, &(f1 * f2), t));
    ensure!(close(t, &chained, &direct, c1 * mags(&[&f2, &i2])), g, f1, f2);
    Check::Pass
}

fn matrix_homomorphism(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let (m, emb, t) = (cx.ops.mul, cx.ops.to_matrix4, &cx.tol);
    ensure!(emb(&m(&a, &b)).approx_eq(&(emb(&a) * emb(&b)), t, mags(&[&a, &b])), a, b);
    ensure!(emb(&(a + b)).approx_eq(&(emb(&a) + emb(&b)), t, mag(&a) + mag(&b)), a, b);
    Check::Pass
}

fn matrix_oracles(rng: &mut TrialRng, cx: &Context) -> Check {
    let a = rng.paravector();
    let (emb, t) = (cx.ops.to_matrix4, &cx.tol);
    let ma: Matrix4 = emb(&a);
    let s = mag(&a);
    ensure!(close_c(t, ma.det(), a.det() * a.det(), s.powi(4)), a);
    ensure!(emb(&a.conj()).approx_eq(&ma.conj_transpose(), t, s), a);
    ensure!(from_matrix4(&ma, t).is_ok_and(|b| close(t, &b, &a, s)), a);
    let matrix_singular = ma.det().norm() <= t.threshold(a.max_abs().powi(4));
    ensure!(matrix_singular == a.is_singular(t), a);
    if let Ok(inv) = a.inverse(t) {
        let Some(mi) = ma.inverse() else { return Check::Fail(vec![a]) };
        ensure!(emb(&inv).approx_eq(&mi, t, s * mag(&inv).powi(2)), a);
    }
    Check::Pass
}

fn matrix_pauli(rng: &mut TrialRng, cx: &Context) -> Check {
    let (a, b) = rng.pair();
    let (m, t) = (cx.ops.mul, &cx.tol);
    let (pa, pb): (Matrix2, Matrix2) = (to_pauli(&a), to_pauli(&b));
    ensure!(to_pauli(&m(&a, &b)).approx_eq(&(pa * pb), t, 2.0 * mags(&[&a, &b])), a, b);
    ensure!(to_pauli(&(a + b)).approx_eq(&(pa + pb), t, 2.0 * (mag(&a) + mag(&b))), a, b);
    ensure!(close_c(t, pa.det(), a.det(), 4.0 * mag(&a).powi(2)), a);
    Check::Pass
}

fn orthogonal_integrated(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let Some(l) = any_orthogonal(rng) else { return Check::Skip };
    let (a, b) = rng.pair();
    let s = mags(&[&a, &b]) * mag(&l).powi(2);
    ensure!(is_orthogonal_transform(&l, t), l);
    let right = integrated(&(a * l), &(b * l), Orientation::Right).value;
    ensure!(close(t, &right, &integrated(&a, &b, Orientation::Right).value, s), a, b, l);
    let left = integrated(&(l * a), &(l * b), Orientation::Left).value;
    ensure!(close(t, &left, &integrated(&a, &b, Orientation::Left).value, s), a, b, l);
    let sp = scalar_product(&a, &b);
    ensure!(close_c(t, scalar_product(&(a * l), &(b * l)), sp, s), a, b, l);
    ensure!(close_c(t, scalar_product(&(l * a), &(l * b)), sp, s), a, b, l);
    Check::Pass
}

fn orthogonal_vigor(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let Some(l) = any_orthogonal(rng) else { return Check::Skip };
    let g1 = rng.paravector();
    let g2 = g1.scale(factor(rng));
    for (x, y) in [(l * g1, l * g2), (g1 * l, g2 * l)] {
        if let Ok(p) = is_parallel(&x.vigor(), &y.vigor(), t) {
            ensure!(p, g1, g2, l);
        }
    }

    let (h1, h2) = rng.pair();
    let s = (mags(&[&h1, &h2]) * mag(&l).powi(2)).powi(2);
    let right = |g: &Paravector| g.conj() * *g;
    let left = |g: &Paravector| *g * g.conj();
    let before = scalar_product(&right(&h1), &right(&h2));
    let after = scalar_product(&right(&(h1 * l)), &right(&(h2 * l)));
    ensure!(close_c(t, after, before, s), h1, h2, l);
    let before = scalar_product(&left(&h1), &left(&h2));
    let after = scalar_product(&left(&(l * h1)), &left(&(l * h2)));
    ensure!(close_c(t, after, before, s), h1, h2, l);
    Check::Pass
}

fn orthogonal_sphere(rng: &mut TrialRng, cx: &Context) -> Check {
    let t = &cx.tol;
    let Some(l) = any_orthogonal(rng) else { return Check::Skip };
    let x = rng.sphere_point();
    let s = (mag(&l) * mag(&x)).powi(2);
    ensure!(t.is_zero((l * x).det().norm(), s), x, l);
    ensure!(t.is_zero((x * l).det().norm(), s), x, l);
    ensure!(t.is_zero((l.rev() * x * l).det().norm(), s * mag(&l).powi(2)), x, l);
    Check::Pass
}
