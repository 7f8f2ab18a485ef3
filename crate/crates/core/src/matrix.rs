//! 4×4 complex matrix and 2×2 Pauli representations.
//!
//! `to_matrix4` is the matrix of left multiplication by a paravector, so
//! matrix products reproduce paravector products. The matrix arithmetic
//! here (product, LU determinant, Gauss–Jordan inverse) does not call into
//! the paravector code and can be used as an independent oracle.

use std::fmt;

use crate::algebra::{CVector3, ComplexScalar, Paravector};
use crate::error::{ParavectorError, Result};
use crate::tolerance::Tolerance;

type C = ComplexScalar;

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);
const I: C = C::new(0.0, 1.0);

/// Row-major 4×4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[C; 4]; 4]);

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[C; 2]; 2]);

impl Matrix4 {
    pub fn identity() -> Self {
        Matrix4(std::array::from_fn(|r| std::array::from_fn(|c| if r == c { ONE } else { ZERO })))
    }

    pub fn transpose(&self) -> Self {
        Matrix4(std::array::from_fn(|r| std::array::from_fn(|c| self.0[c][r])))
    }

    /// Hermitian conjugate.
    pub fn conj_transpose(&self) -> Self {
        Matrix4(std::array::from_fn(|r| std::array::from_fn(|c| self.0[c][r].conj())))
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |m, z| m.max(z.re.abs()).max(z.im.abs()))
    }

    /// Entrywise comparison with the given scale.
    pub fn approx_eq(&self, other: &Matrix4, tol: &Tolerance, scale: f64) -> bool {
        self.0.iter().flatten().zip(other.0.iter().flatten()).all(|(a, b)| {
            tol.close(a.re, b.re, scale) && tol.close(a.im, b.im, scale)
        })
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> C {
        let mut m = self.0;
        let mut det = ONE;
        for k in 0..4 {
            let pivot = (k..4)
                .max_by(|&i, &j| m[i][k].norm().total_cmp(&m[j][k].norm()))
                .unwrap();
            if m[pivot][k] == ZERO {
                return ZERO;
            }
            if pivot != k {
                m.swap(pivot, k);
                det = -det;
            }
            det *= m[k][k];
            for i in k + 1..4 {
                let factor = m[i][k] / m[k][k];
                let pivot_row = m[k];
                for (x, p) in m[i].iter_mut().zip(pivot_row).skip(k) {
                    *x -= factor * p;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse with partial pivoting; `None` for an exactly
    /// singular pivot.
    pub fn inverse(&self) -> Option<Matrix4> {
        let mut a = self.0;
        let mut inv = Matrix4::identity().0;
        for k in 0..4 {
            let pivot = (k..4).max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))?;
            if a[pivot][k] == ZERO {
                return None;
            }
            a.swap(pivot, k);
            inv.swap(pivot, k);
            let p = a[k][k].inv();
            for j in 0..4 {
                a[k][j] *= p;
                inv[k][j] *= p;
            }
            for i in (0..4).filter(|&i| i != k) {
                let factor = a[i][k];
                for j in 0..4 {
                    let (ak, ik) = (a[k][j], inv[k][j]);
                    a[i][j] -= factor * ak;
                    inv[i][j] -= factor * ik;
                }
            }
        }
        Some(Matrix4(inv))
    }
}

impl std::ops::Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..4).map(|k| self.0[r][k] * rhs.0[k][c]).sum())
        }))
    }
}

impl std::ops::Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|r| std::array::from_fn(|c| self.0[r][c] + rhs.0[r][c])))
    }
}

impl Matrix2 {
    pub fn det(&self) -> C {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn approx_eq(&self, other: &Matrix2, tol: &Tolerance, scale: f64) -> bool {
        self.0.iter().flatten().zip(other.0.iter().flatten()).all(|(a, b)| {
            tol.close(a.re, b.re, scale) && tol.close(a.im, b.im, scale)
        })
    }
}

impl std::ops::Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        Matrix2(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][0] * rhs.0[0][c] + self.0[r][1] * rhs.0[1][c])
        }))
    }
}

impl std::ops::Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        Matrix2(std::array::from_fn(|r| std::array::from_fn(|c| self.0[r][c] + rhs.0[r][c])))
    }
}

/// The pattern
///
/// ```text
/// [ α   βx    βy    βz  ]
/// [ βx  α    -iβz   iβy ]
/// [ βy  iβz   α    -iβx ]
/// [ βz -iβy   iβx   α   ]
/// ```
pub fn to_matrix4(g: &Paravector) -> Matrix4 {
    let a = g.scalar();
    let [x, y, z] = g.vector().components();
    Matrix4([
        [a, x, y, z],
        [x, a, -I * z, I * y],
        [y, I * z, a, -I * x],
        [z, -I * y, I * x, a],
    ])
}

/// Reads `α` and `β` from the first row and checks every entry against the
/// pattern of [`to_matrix4`].
pub fn from_matrix4(m: &Matrix4, tol: &Tolerance) -> Result<Paravector> {
    let [a, x, y, z] = m.0[0];
    let g = Paravector::try_new(a, CVector3::new(x, y, z))?;
    let expected = to_matrix4(&g);
    let scale = m.max_abs();
    for r in 0..4 {
        for c in 0..4 {
            let (got, want) = (m.0[r][c], expected.0[r][c]);
            if !(tol.close(got.re, want.re, scale) && tol.close(got.im, want.im, scale)) {
                return Err(ParavectorError::NotAParavectorMatrix { row: r, col: c });
            }
        }
    }
    Ok(g)
}

pub fn pauli_x() -> Matrix2 {
    Matrix2([[ZERO, ONE], [ONE, ZERO]])
}

pub fn pauli_y() -> Matrix2 {
    Matrix2([[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> Matrix2 {
    Matrix2([[ONE, ZERO], [ZERO, -ONE]])
}

pub fn pauli_identity() -> Matrix2 {
    Matrix2([[ONE, ZERO], [ZERO, ONE]])
}

/// `α σ₀ + βx σx + βy σy + βz σz`.
pub fn to_pauli(g: &Paravector) -> Matrix2 {
    let a = g.scalar();
    let [x, y, z] = g.vector().components();
    Matrix2([[a + z, x - I * y], [x + I * y, a - z]])
}

fn format_complex(z: &C) -> String {
    // adding 0.0 turns -0 into 0
    let z = C::new(z.re + 0.0, z.im + 0.0);
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

fn write_grid<const N: usize>(f: &mut fmt::Formatter<'_>, rows: &[[C; N]; N]) -> fmt::Result {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(format_complex).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(f, "[ {} ]", line.join("  "))?;
    }
    Ok(())
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.0)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.0)
    }
}
