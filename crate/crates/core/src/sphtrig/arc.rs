//! Minor great-circle arcs.

use libm::atan2;

use super::vector::{SpherePoint, Vec3};
use crate::error::{Error, Result};

/// The minor great-circle arc from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatArc {
    a: SpherePoint,
    b: SpherePoint,
}

/// Where a great circle strictly crosses an arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcCrossing {
    /// Arc-length fraction from `a` towards `b`, in `(0, 1)`.
    pub t: f64,
    /// Azimuth of the crossing about the pole, in `(-pi, pi]`.
    pub azimuth: f64,
    pub point: SpherePoint,
}

impl GreatArc {
    /// Rejects coincident and antipodal endpoints.
    pub fn new(a: SpherePoint, b: SpherePoint) -> Result<Self> {
        if a.vec().cross(b.vec()).norm() < 1e-12 {
            return Err(Error::DegenerateArc);
        }
        Ok(Self { a, b })
    }

    #[must_use]
    pub fn a(&self) -> SpherePoint {
        self.a
    }

    #[must_use]
    pub fn b(&self) -> SpherePoint {
        self.b
    }

    #[must_use]
    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    #[must_use]
    pub fn reversed(&self) -> Self {
        Self { a: self.b, b: self.a }
    }

    /// Unit normal of the carrying great circle, `a x b` normalized.
    #[must_use]
    pub fn normal(&self) -> Vec3 {
        self.a.vec().cross(self.b.vec()).normalized().expect("proper arc has a normal")
    }

    /// Point at arc-length fraction `t` from `a`.
    #[must_use]
    pub fn point_at(&self, t: f64) -> SpherePoint {
        let len = self.length();
        let n = self.normal();
        let dir = n.cross(self.a.vec());
        let s = t * len;
        SpherePoint::from_direction(self.a.vec() * libm::cos(s) + dir * libm::sin(s)).expect("unit combination")
    }

    /// Whether `p`, assumed on the carrying circle, lies within the arc.
    fn contains_on_circle(&self, p: Vec3, n: Vec3, tol: f64) -> bool {
        self.a.vec().cross(p).dot(n) >= -tol
            && p.cross(self.b.vec()).dot(n) >= -tol
            && p.dot(self.a.vec() + self.b.vec()) > 0.0
    }

    /// Spherical distance from `p` to the closest point of the arc.
    #[must_use]
    pub fn distance_to_point(&self, p: SpherePoint) -> f64 {
        let n = self.normal();
        let v = p.vec();
        let h = v.dot(n);
        let foot = v - n * h;
        if let Some(f) = foot.normalized() {
            if self.contains_on_circle(f, n, 0.0) {
                return atan2(h.abs(), foot.norm());
            }
        }
        self.a.distance(p).min(self.b.distance(p))
    }

    /// Whether the two arcs share a point, up to `tol` in the side tests.
    #[must_use]
    pub fn intersects(&self, o: &GreatArc, tol: f64) -> bool {
        let n1 = self.normal();
        let n2 = o.normal();
        let x = n1.cross(n2);
        match (x.norm() > 1e-12).then(|| x.normalized()).flatten() {
            None => {
                // Same carrying circle: overlap iff an endpoint of one lies in the other.
                self.contains_on_circle(o.a.vec(), n1, tol)
                    || self.contains_on_circle(o.b.vec(), n1, tol)
                    || o.contains_on_circle(self.a.vec(), n2, tol)
            }
            Some(x) => {
                [x, -x].into_iter().any(|c| self.contains_on_circle(c, n1, tol) && o.contains_on_circle(c, n2, tol))
            }
        }
    }

    /// Minimum spherical distance between the two arcs (0 when they meet).
    #[must_use]
    pub fn distance_to_arc(&self, o: &GreatArc) -> f64 {
        if self.intersects(o, 0.0) {
            return 0.0;
        }
        self.distance_to_point(o.a)
            .min(self.distance_to_point(o.b))
            .min(o.distance_to_point(self.a))
            .min(o.distance_to_point(self.b))
    }
}

/// Strict crossing of the equator of `pole` with the arc `e`.
///
/// Returns `None` unless the endpoints lie strictly on opposite sides:
/// `(pole . a)(pole . b) < -1e-14`.
#[must_use]
pub fn pole_edge_crossing(pole: SpherePoint, e: &GreatArc) -> Option<ArcCrossing> {
    let u = pole.vec();
    let (ua, ub) = (u.dot(e.a.vec()), u.dot(e.b.vec()));
    if ua * ub >= -1e-14 {
        return None;
    }
    // (u.a) b - (u.b) a is orthogonal to u; flip it to a positive combination.
    let raw = e.b.vec() * ua - e.a.vec() * ub;
    let raw = if ua > 0.0 { raw } else { -raw };
    let point = SpherePoint::from_direction(raw)?;
    let t = e.a.distance(point) / e.length();
    Some(ArcCrossing { t, azimuth: pole.azimuth_of(point.vec()), point })
}
