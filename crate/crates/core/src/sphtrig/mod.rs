//! Spherical trigonometry kernel.
//!
//! Closed-form metric quantities of regular spherical triangles and squares,
//! plus the point, rotation and arc primitives used by the rest of the crate.
//!
//! Every `arccos` argument goes through [`acos_checked`]: values within
//! [`CLAMP_TOL`] of `[-1, 1]` are clamped, anything further out is an error.

mod arc;
mod rotation;
mod vector;

use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use libm::{acos, cos, sin, tan};

pub use arc::{pole_edge_crossing, ArcCrossing, GreatArc};
pub use rotation::{axis_angle, rot_about, AxisAngle, Rotation3, NEAR_IDENTITY};
pub use vector::{SpherePoint, Vec3, UNIT_TOL};

use crate::error::{Error, Result};
use vector::sq;

/// Largest excursion outside `[-1, 1]` that is treated as rounding.
pub const CLAMP_TOL: f64 = 1e-12;

/// `arccos` with the clamping discipline described in the module docs.
pub fn acos_checked(what: &'static str, x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 + CLAMP_TOL {
        return Err(Error::TrigArgument { what, value: x });
    }
    Ok(acos(x.clamp(-1.0, 1.0)))
}

/// Interior angle of a regular spherical facet, in radians, strictly inside `(0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PlanarAngle(f64);

impl PlanarAngle {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= PI {
            return Err(Error::Domain { what: "planar angle", value: alpha });
        }
        Ok(Self(alpha))
    }

    /// `k * pi`, the form used on the command line.
    pub fn from_pi_multiple(k: f64) -> Result<Self> {
        Self::new(k * PI)
    }

    #[must_use]
    pub fn radians(self) -> f64 {
        self.0
    }
}

fn require(what: &'static str, alpha: f64, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain { what, value: alpha })
    }
}

/// Law of cosines for sides: side `b` opposite angle `B` from sides `a`, `c`.
pub fn cos_side(a: f64, c: f64, angle_b: f64) -> Result<f64> {
    for v in [a, c, angle_b] {
        require("cos_side input", v, v > 0.0 && v < PI)?;
    }
    acos_checked("cos_side", cos(a) * cos(c) + sin(a) * sin(c) * cos(angle_b))
}

/// Law of cosines for angles: angle `C` opposite side `c`.
pub fn cos_angle(a: f64, b: f64, c: f64) -> Result<f64> {
    for v in [a, b, c] {
        require("cos_angle input", v, v > 0.0 && v < PI)?;
    }
    acos_checked("cos_angle", (cos(c) - cos(a) * cos(b)) / (sin(a) * sin(b)))
}

/// Mixed angle-side relation: side `b` from side `a` and the three angles,
/// `cos b sin A = cos a sin B cos C + sin C cos B`.
pub fn side_from_mixed(a: f64, angle_a: f64, angle_b: f64, angle_c: f64) -> Result<f64> {
    for v in [a, angle_a, angle_b, angle_c] {
        require("side_from_mixed input", v, v > 0.0 && v < PI)?;
    }
    let sa = sin(angle_a);
    require("side_from_mixed sin A", sa, sa > 1e-12)?;
    acos_checked("side_from_mixed", (cos(a) * sin(angle_b) * cos(angle_c) + sin(angle_c) * cos(angle_b)) / sa)
}

/// Residual of the mixed relation for a full triangle `(a, b; A, B, C)`.
#[must_use]
pub fn mixed_relation_residual(a: f64, b: f64, angle_a: f64, angle_b: f64, angle_c: f64) -> f64 {
    (cos(b) * sin(angle_a) - cos(a) * sin(angle_b) * cos(angle_c) - sin(angle_c) * cos(angle_b)).abs()
}

/// Edge of the regular spherical triangle with interior angle `alpha`,
/// `arccos(cos a / (1 - cos a))`, for `alpha` in `(pi/3, 2pi/3]`.
pub fn tetra_edge(alpha: PlanarAngle) -> Result<f64> {
    let a = alpha.radians();
    require("tetra_edge", a, a > FRAC_PI_3 && a <= 2.0 * FRAC_PI_3 + 1e-15)?;
    acos_checked("tetra_edge", cos(a) / (1.0 - cos(a)))
}

fn square_domain(what: &'static str, a: f64) -> Result<()> {
    require(what, a, (FRAC_PI_2..=2.0 * FRAC_PI_3 + 1e-15).contains(&a))
}

/// Edge of the regular spherical square, `arccos(cot^2(alpha/2))`.
///
/// Defined on `[pi/2, 2pi/3]`; the flat limit `pi/2` gives 0.
pub fn cube_edge(alpha: PlanarAngle) -> Result<f64> {
    let a = alpha.radians();
    square_domain("cube_edge", a)?;
    acos_checked("cube_edge", sq(1.0 / tan(a / 2.0)))
}

/// Diagonal of the regular spherical square,
/// `arccos((cos^4(alpha/2) - cos^2 alpha) / sin^4(alpha/2))`.
pub fn cube_diagonal(alpha: PlanarAngle) -> Result<f64> {
    let a = alpha.radians();
    square_domain("cube_diagonal", a)?;
    let (c2, s2) = (sq(cos(a / 2.0)), sq(sin(a / 2.0)));
    acos_checked("cube_diagonal", (c2 * c2 - sq(cos(a))) / (s2 * s2))
}

/// Arc joining the midpoints of opposite sides of the regular spherical
/// square, `arccos(sin(3 alpha / 2) / sin(alpha / 2))`.
pub fn square_midline(alpha: PlanarAngle) -> Result<f64> {
    let a = alpha.radians();
    square_domain("square_midline", a)?;
    acos_checked("square_midline", sin(1.5 * a) / sin(a / 2.0))
}

/// Circumradius of the regular spherical `n`-gon with interior angle `alpha`.
///
/// From the right triangle centre / vertex / side midpoint:
/// `cos rho = cot(alpha/2) cot(pi/n)`.
pub fn circumradius(n: usize, alpha: PlanarAngle) -> Result<f64> {
    if n != 3 && n != 4 {
        return Err(Error::Domain { what: "circumradius side count", value: n as f64 });
    }
    let a = alpha.radians();
    let flat = PI * (n as f64 - 2.0) / n as f64;
    require("circumradius", a, a > flat)?;
    acos_checked("circumradius", 1.0 / tan(a / 2.0) / tan(PI / n as f64))
}
