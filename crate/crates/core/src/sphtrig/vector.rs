//! Plain 3-vectors and unit points on the sphere.

use core::ops::{Add, Mul, Neg, Sub};

use libm::sqrt;

use crate::error::{Error, Result};

/// Tolerance on `|v| - 1` for a vector to count as a point of the unit sphere.
pub const UNIT_TOL: f64 = 1e-12;

/// A vector in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[must_use]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    #[must_use]
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[must_use]
    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(self.y * o.z - self.z * o.y, self.z * o.x - self.x * o.z, self.x * o.y - self.y * o.x)
    }

    #[must_use]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[must_use]
    pub fn norm(self) -> f64 {
        sqrt(self.norm_sq())
    }

    /// Scales to unit length; `None` for (nearly) zero vectors.
    #[must_use]
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n < 1e-300 || !n.is_finite() {
            None
        } else {
            Some(self * (1.0 / n))
        }
    }

    #[must_use]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// A point of the unit sphere.
///
/// Construction checks `|p| = 1` within [`UNIT_TOL`]; the stored coordinates
/// are renormalized so chained operations do not drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint(Vec3);

impl SpherePoint {
    pub const NORTH: SpherePoint = SpherePoint(Vec3::Z);

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::try_from_vec(Vec3::new(x, y, z))
    }

    pub fn try_from_vec(v: Vec3) -> Result<Self> {
        let n = v.norm();
        if !n.is_finite() || (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm: n });
        }
        Ok(SpherePoint(v * (1.0 / n)))
    }

    /// Projects any nonzero vector onto the sphere.
    #[must_use]
    pub fn from_direction(v: Vec3) -> Option<Self> {
        v.normalized().map(SpherePoint)
    }

    /// Point at colatitude `theta` from the north pole and longitude `phi`.
    #[must_use]
    pub fn from_polar(theta: f64, phi: f64) -> Self {
        let (st, ct) = (libm::sin(theta), libm::cos(theta));
        SpherePoint(Vec3::new(st * libm::cos(phi), st * libm::sin(phi), ct))
    }

    #[must_use]
    pub fn vec(self) -> Vec3 {
        self.0
    }

    #[must_use]
    pub fn x(self) -> f64 {
        self.0.x
    }

    #[must_use]
    pub fn y(self) -> f64 {
        self.0.y
    }

    #[must_use]
    pub fn z(self) -> f64 {
        self.0.z
    }

    #[must_use]
    pub fn antipode(self) -> Self {
        SpherePoint(-self.0)
    }

    /// Great-circle distance in radians.
    #[must_use]
    pub fn distance(self, o: SpherePoint) -> f64 {
        // atan2 form stays accurate for nearly equal and nearly antipodal points.
        libm::atan2(self.0.cross(o.0).norm(), self.0.dot(o.0))
    }

    /// Deterministic orthonormal tangent frame `(e1, e2)` with `e1 x e2 = self`.
    ///
    /// `e1` is the coordinate axis least aligned with the point, made
    /// orthogonal to it by Gram-Schmidt.
    #[must_use]
    pub fn tangent_frame(self) -> (Vec3, Vec3) {
        let p = self.0;
        let (ax, ay, az) = (p.x.abs(), p.y.abs(), p.z.abs());
        let axis = if ax <= ay && ax <= az {
            Vec3::X
        } else if ay <= az {
            Vec3::Y
        } else {
            Vec3::Z
        };
        let e1 = (axis - p * p.dot(axis)).normalized().expect("least aligned axis is never parallel to a unit vector");
        let e2 = p.cross(e1);
        (e1, e2)
    }

    /// Signed azimuth of `v` about this point as pole, in `(-pi, pi]`.
    #[must_use]
    pub fn azimuth_of(self, v: Vec3) -> f64 {
        let (e1, e2) = self.tangent_frame();
        libm::atan2(v.dot(e2), v.dot(e1))
    }
}

impl From<SpherePoint> for Vec3 {
    fn from(p: SpherePoint) -> Vec3 {
        p.0
    }
}

#[must_use]
pub(crate) fn sq(x: f64) -> f64 {
    x * x
}
