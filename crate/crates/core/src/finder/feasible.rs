//! Feasible poles for a partial crossing sequence.
//!
//! The set of poles `u` with `u . a > 0 > u . b` for a family of arcs is an
//! intersection of open hemispheres, a convex spherical polygon. It is kept
//! exactly by clipping one great circle at a time; a hemisphere with nothing
//! left means no pole, and no geodesic, exists for the prefix.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use libm::{ceil, cos, sin};

use crate::sphtrig::{GreatArc, SpherePoint, Vec3};

/// Vertices with `u . c` at or below this count as outside a constraint.
pub const FEASIBILITY_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Sphere,
    Hemisphere(Vec3),
    /// Counterclockwise about the interior, every edge at most a quarter turn.
    Polygon(Vec<Vec3>),
    Empty,
}

/// Region of admissible poles.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleRegion {
    shape: Shape,
}

impl Default for PoleRegion {
    fn default() -> Self {
        Self::sphere()
    }
}

impl PoleRegion {
    #[must_use]
    pub fn sphere() -> Self {
        Self { shape: Shape::Sphere }
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.shape == Shape::Empty
    }

    /// Keeps the poles with `u . c > 0`.
    pub fn require_positive(&mut self, c: Vec3) {
        let Some(c) = c.normalized() else {
            self.shape = Shape::Empty;
            return;
        };
        self.shape = match core::mem::replace(&mut self.shape, Shape::Empty) {
            Shape::Empty => Shape::Empty,
            Shape::Sphere => Shape::Hemisphere(c),
            Shape::Hemisphere(h) => {
                let line = h.cross(c);
                match line.normalized().filter(|_| line.norm() > 1e-15) {
                    None if h.dot(c) > 0.0 => Shape::Hemisphere(h),
                    None => Shape::Empty,
                    Some(e1) => clip(&[e1, h.cross(e1), -e1, -h.cross(e1)], c),
                }
            }
            Shape::Polygon(v) => clip(&v, c),
        };
    }

    /// Keeps the poles whose equator crosses `arc` from its `b` side to its
    /// `a` side when travelling counterclockwise: `u . a > 0 > u . b`.
    pub fn require_crossing(&mut self, arc: &GreatArc) {
        self.require_positive(arc.a().vec());
        self.require_positive(-arc.b().vec());
    }

    /// A point inside the region, if any.
    #[must_use]
    pub fn witness(&self) -> Option<SpherePoint> {
        match &self.shape {
            Shape::Empty => None,
            Shape::Sphere => Some(SpherePoint::NORTH),
            Shape::Hemisphere(h) => SpherePoint::from_direction(*h),
            Shape::Polygon(v) => SpherePoint::from_direction(v.iter().fold(Vec3::ZERO, |s, &p| s + p)),
        }
    }

    /// Vertices of the region when it is a proper polygon.
    #[must_use]
    pub fn vertices(&self) -> &[Vec3] {
        match &self.shape {
            Shape::Polygon(v) => v,
            _ => &[],
        }
    }
}

/// Point where the edge `p -> q` meets the plane of the clip circle.
fn cut(p: Vec3, q: Vec3, dp: f64, dq: f64) -> Vec3 {
    let x = q * dp - p * dq;
    let x = if x.dot(p + q) < 0.0 { -x } else { x };
    x.normalized().unwrap_or(p)
}

fn clip(verts: &[Vec3], c: Vec3) -> Shape {
    let d: Vec<f64> = verts.iter().map(|v| v.dot(c)).collect();
    let inside = |x: f64| x > FEASIBILITY_MARGIN;
    if d.iter().all(|&x| inside(x)) {
        return Shape::Polygon(verts.to_vec());
    }
    if !d.iter().any(|&x| inside(x)) {
        return Shape::Empty;
    }
    let n = verts.len();
    let mut out: Vec<Vec3> = Vec::with_capacity(n + 4);
    let mut exit = None;
    for i in 0..n {
        let j = (i + 1) % n;
        let (pin, qin) = (inside(d[i]), inside(d[j]));
        if pin {
            out.push(verts[i]);
        }
        if pin != qin {
            out.push(cut(verts[i], verts[j], d[i], d[j]));
            if pin {
                exit = Some(out.len() - 1);
            }
        }
    }
    // Close along the clip circle from the exit point to the entry point,
    // counterclockwise about `c`, in pieces of at most a quarter turn.
    if let Some(k) = exit {
        let e = out[k];
        let s = out[(k + 1) % out.len()];
        let mut phi = libm::atan2(c.dot(e.cross(s)), e.dot(s));
        if phi < -1e-12 {
            phi += core::f64::consts::TAU;
        }
        if phi > FRAC_PI_2 {
            let pieces = ceil(phi / FRAC_PI_2) as usize;
            let side = c.cross(e);
            let extra: Vec<Vec3> = (1..pieces)
                .map(|j| {
                    let a = phi * j as f64 / pieces as f64;
                    e * cos(a) + side * sin(a)
                })
                .collect();
            out.splice(k + 1..k + 1, extra);
        }
    }
    out.dedup_by(|a, b| (*a - *b).norm() < 1e-14);
    if out.len() > 1 && (out[0] - out[out.len() - 1]).norm() < 1e-14 {
        out.pop();
    }
    if out.len() < 3 {
        Shape::Empty
    } else {
        Shape::Polygon(out)
    }
}

/// Whether some pole satisfies `u . a > 0 > u . b` for every arc `(a, b)`.
#[must_use]
pub fn feasible_pole_exists(arcs: &[GreatArc]) -> bool {
    let mut r = PoleRegion::sphere();
    for a in arcs {
        r.require_crossing(a);
        if r.is_empty() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sp(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::from_direction(Vec3::new(x, y, z)).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng) -> Vec3 {
        loop {
            let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if v.norm() > 0.1 && v.norm() < 1.0 {
                return v.normalized().unwrap();
            }
        }
    }

    /// Best margin over a dense Fibonacci sphere.
    fn sampled_margin(cs: &[Vec3]) -> f64 {
        let n = 20_000;
        let golden = core::f64::consts::PI * (3.0 - libm::sqrt(5.0));
        (0..n)
            .map(|i| {
                let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
                let r = libm::sqrt(1.0 - z * z);
                let u = Vec3::new(r * cos(golden * i as f64), r * sin(golden * i as f64), z);
                cs.iter().map(|c| u.dot(*c)).fold(f64::INFINITY, f64::min)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn single_arc() {
        let a = GreatArc::new(sp(1.0, 0.0, 0.1), sp(1.0, 0.0, -0.1)).unwrap();
        assert!(feasible_pole_exists(&[a]));
    }

    #[test]
    fn contradictory_pair() {
        let a = GreatArc::new(sp(1.0, 0.0, 0.1), sp(1.0, 0.0, -0.1)).unwrap();
        assert!(!feasible_pole_exists(&[a, a.reversed()]));
    }

    #[test]
    fn antipodal_constraints_leave_nothing() {
        let mut r = PoleRegion::sphere();
        r.require_positive(Vec3::Z);
        r.require_positive(-Vec3::Z);
        assert!(r.is_empty());
    }

    #[test]
    fn lune_then_triangle() {
        let mut r = PoleRegion::sphere();
        r.require_positive(Vec3::X);
        r.require_positive(Vec3::Y);
        assert_eq!(r.vertices().len(), 4);
        r.require_positive(Vec3::Z);
        let w = r.witness().unwrap().vec();
        assert!(w.x > 0.0 && w.y > 0.0 && w.z > 0.0);
        r.require_positive(Vec3::new(-1.0, -1.0, -1.0) + Vec3::X * 0.01);
        assert!(r.is_empty());
    }

    #[test]
    fn agrees_with_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let k = rng.gen_range(1..7);
            let cs: Vec<Vec3> = (0..k).map(|_| random_point(&mut rng)).collect();
            let mut r = PoleRegion::sphere();
            for &c in &cs {
                r.require_positive(c);
            }
            let margin = sampled_margin(&cs);
            if margin > 0.02 {
                assert!(!r.is_empty(), "{cs:?}");
            }
            if margin < -0.05 {
                assert!(r.is_empty(), "{cs:?}");
            }
            if let Some(w) = r.witness() {
                if margin > 0.02 {
                    assert!(cs.iter().all(|c| w.vec().dot(*c) > 0.0));
                }
            }
        }
    }
}
