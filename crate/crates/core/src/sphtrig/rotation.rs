//! Orientation-preserving isometries of the unit sphere.

use core::ops::Mul;

use libm::{atan2, cos, sin, sqrt};

use super::vector::{SpherePoint, Vec3, UNIT_TOL};
use crate::error::{Error, Result};

/// Rotation angle below which a rotation is reported as the identity.
pub const NEAR_IDENTITY: f64 = 1e-9;

/// A proper rotation stored as a row-major orthonormal matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    m: [[f64; 3]; 3],
}

impl Default for Rotation3 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Rotation3 {
    pub const IDENTITY: Rotation3 = Rotation3 { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] };

    /// Wraps a matrix without checking it; see [`Rotation3::orthonormality_residual`].
    #[must_use]
    pub const fn from_matrix_unchecked(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    /// Wraps a matrix, rejecting it unless it is orthonormal with determinant +1.
    pub fn from_matrix(m: [[f64; 3]; 3]) -> Option<Self> {
        let r = Self { m };
        (r.orthonormality_residual() < 1e-12 && (r.determinant() - 1.0).abs() < 1e-12).then_some(r)
    }

    #[must_use]
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        self.m
    }

    /// Rotation about the z axis.
    #[must_use]
    pub fn about_z(angle: f64) -> Self {
        let (s, c) = (sin(angle), cos(angle));
        Self { m: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]] }
    }

    #[must_use]
    pub fn apply(&self, v: Vec3) -> Vec3 {
        let m = &self.m;
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    /// Image of a sphere point, renormalized.
    #[must_use]
    pub fn apply_point(&self, p: SpherePoint) -> SpherePoint {
        SpherePoint::from_direction(self.apply(p.vec())).expect("rotation preserves norm")
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        let m = &self.m;
        Self { m: [[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]] }
    }

    #[must_use]
    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest entry of `|R^T R - I|`.
    #[must_use]
    pub fn orthonormality_residual(&self) -> f64 {
        let p = self.inverse() * *self;
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.m[i][j] - target).abs());
            }
        }
        worst
    }

    /// Largest entry of `|self - other|`.
    #[must_use]
    pub fn max_abs_diff(&self, other: &Rotation3) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        worst
    }

    /// Unit quaternion `(w, x, y, z)` with `w >= 0` (Shepperd's method).
    #[must_use]
    pub fn to_quaternion(&self) -> [f64; 4] {
        let m = &self.m;
        let tr = m[0][0] + m[1][1] + m[2][2];
        let q = if tr >= m[0][0] && tr >= m[1][1] && tr >= m[2][2] {
            let s = 2.0 * sqrt((1.0 + tr).max(0.0));
            [0.25 * s, (m[2][1] - m[1][2]) / s, (m[0][2] - m[2][0]) / s, (m[1][0] - m[0][1]) / s]
        } else if m[0][0] >= m[1][1] && m[0][0] >= m[2][2] {
            let s = 2.0 * sqrt((1.0 + m[0][0] - m[1][1] - m[2][2]).max(0.0));
            [(m[2][1] - m[1][2]) / s, 0.25 * s, (m[0][1] + m[1][0]) / s, (m[0][2] + m[2][0]) / s]
        } else if m[1][1] >= m[2][2] {
            let s = 2.0 * sqrt((1.0 + m[1][1] - m[0][0] - m[2][2]).max(0.0));
            [(m[0][2] - m[2][0]) / s, (m[0][1] + m[1][0]) / s, 0.25 * s, (m[1][2] + m[2][1]) / s]
        } else {
            let s = 2.0 * sqrt((1.0 + m[2][2] - m[0][0] - m[1][1]).max(0.0));
            [(m[1][0] - m[0][1]) / s, (m[0][2] + m[2][0]) / s, (m[1][2] + m[2][1]) / s, 0.25 * s]
        };
        let n = sqrt(q.iter().map(|c| c * c).sum::<f64>());
        let sign = if q[0] < 0.0 { -1.0 } else { 1.0 };
        [sign * q[0] / n, sign * q[1] / n, sign * q[2] / n, sign * q[3] / n]
    }

    #[must_use]
    pub fn from_quaternion(q: [f64; 4]) -> Self {
        let n = sqrt(q.iter().map(|c| c * c).sum::<f64>());
        let [w, x, y, z] = [q[0] / n, q[1] / n, q[2] / n, q[3] / n];
        Self {
            m: [
                [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
                [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
                [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
            ],
        }
    }

    /// Projects back onto SO(3) through the quaternion.
    #[must_use]
    pub fn renormalized(&self) -> Self {
        Self::from_quaternion(self.to_quaternion())
    }
}

impl Mul for Rotation3 {
    type Output = Rotation3;

    /// `(a * b).apply(v) == a.apply(b.apply(v))`.
    fn mul(self, o: Rotation3) -> Rotation3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        Rotation3 { m }
    }
}

/// Rodrigues rotation by `angle` counterclockwise about `axis` (viewed from
/// the tip of `axis`).
pub fn rot_about(axis: Vec3, angle: f64) -> Result<Rotation3> {
    let n = axis.norm();
    if !n.is_finite() || (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit { norm: n });
    }
    let u = axis * (1.0 / n);
    let (s, c) = (sin(angle), cos(angle));
    let t = 1.0 - c;
    Ok(Rotation3 {
        m: [
            [c + t * u.x * u.x, t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y],
            [t * u.x * u.y + s * u.z, c + t * u.y * u.y, t * u.y * u.z - s * u.x],
            [t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, c + t * u.z * u.z],
        ],
    })
}

/// Axis and angle of a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    /// Oriented so that the rotation is counterclockwise about it.
    pub axis: SpherePoint,
    /// Rotation angle in `[0, pi]`.
    pub angle: f64,
    /// `angle < NEAR_IDENTITY`; the axis is then arbitrary.
    pub near_identity: bool,
}

impl AxisAngle {
    /// The rotation angle measured counterclockwise about `reference`, in `(-pi, pi]`.
    #[must_use]
    pub fn signed_angle_about(&self, reference: Vec3) -> f64 {
        if self.axis.vec().dot(reference) >= 0.0 || self.angle >= core::f64::consts::PI {
            self.angle
        } else {
            -self.angle
        }
    }
}

/// Extracts the axis and angle of `r`; the axis is chosen so the angle is
/// non-negative.
#[must_use]
pub fn axis_angle(r: &Rotation3) -> AxisAngle {
    let [w, x, y, z] = r.to_quaternion();
    let v = Vec3::new(x, y, z);
    let vn = v.norm();
    let angle = 2.0 * atan2(vn, w);
    match SpherePoint::from_direction(v) {
        Some(axis) if vn > 1e-300 => AxisAngle { axis, angle, near_identity: angle < NEAR_IDENTITY },
        _ => AxisAngle { axis: SpherePoint::NORTH, angle: 0.0, near_identity: true },
    }
}
