use thiserror::Error;

/// Failures of the paravector operations.
///
/// Every variant corresponds to a violated precondition; none of them are
/// transient.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParavectorError {
    #[error("non-finite component {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("singular paravector (|det| = {det_abs:.3e})")]
    SingularParavector { det_abs: f64 },
    #[error("improper paravector (det = {re} + {im}i)")]
    ImproperParavector { re: f64, im: f64 },
    #[error("angles have different orientations")]
    OrientationMismatch,
    #[error("axis is not a unit vector (|n| = {norm})")]
    BadUnitVector { norm: f64 },
    #[error("isotropic normal vector (w.w = {re} + {im}i)")]
    IsotropicNormal { re: f64, im: f64 },
    #[error("mirror normals compose to a degenerate rotation")]
    DegenerateComposition,
    #[error("axis paravector is not orthogonal (det = {re} + {im}i)")]
    NotOrthogonal { re: f64, im: f64 },
    #[error("matrix entry ({row}, {col}) does not follow the paravector pattern")]
    NotAParavectorMatrix { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, ParavectorError>;
