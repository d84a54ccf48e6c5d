//! Closure of a single crossing sequence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use libm::atan2;

use super::{CrossingPoint, FaceArc, GeodesicPath};
use crate::solids::SolidSpec;
use crate::sphtrig::{axis_angle, pole_edge_crossing, GreatArc, Rotation3, SpherePoint, Vec3, NEAR_IDENTITY};
use crate::unfold::{develop, developed_edge, CrossingSequence, DirectedCrossing};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Allowed mismatch between the summed arc lengths and the holonomy angle.
    pub closure_tol: f64,
    /// Crossings closer than this fraction to an edge end are rejected.
    pub vertex_tol: f64,
    /// Arcs closer than this in one face count as intersecting.
    pub simple_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { closure_tol: 1e-9, vertex_tol: 1e-9, simple_tol: 1e-10 }
    }
}

/// Signed angle from `x` to `y` counterclockwise about `u`.
fn turn(u: Vec3, x: Vec3, y: Vec3) -> f64 {
    atan2(u.dot(x.cross(y)), x.dot(y))
}

fn angle_between(x: Vec3, y: Vec3) -> f64 {
    atan2(x.cross(y).norm(), x.dot(y))
}

/// Tangent at `x` of the edge `arc` directed from its lower-numbered vertex.
fn edge_tangent(arc: &GreatArc, x: Vec3, lower_first: bool) -> Vec3 {
    let t = arc.normal().cross(x);
    if lower_first {
        t
    } else {
        -t
    }
}

/// Local edge of `c` in its source face and whether that face lists the
/// edge's lower vertex first.
fn local(spec: &SolidSpec, c: &DirectedCrossing) -> (usize, bool) {
    let i = spec.local_edge(c.from_face, c.edge).expect("valid crossing");
    let f = spec.face(c.from_face);
    (i, f[i] < f[(i + 1) % f.len()])
}

/// Closed geodesic realizing `seq`, without the simplicity test.
#[must_use]
pub fn solve_closure(spec: &SolidSpec, seq: &CrossingSequence, opts: &SolveOptions) -> Option<GeodesicPath> {
    let dev = develop(spec, seq).ok()?;
    let aa = axis_angle(&dev.closing);
    if aa.near_identity || aa.angle < NEAR_IDENTITY {
        return None;
    }
    let first = dev.arcs[0];
    let axis = aa.axis.vec();
    let (pole, theta) = if axis.dot(first.b().vec()) > 0.0 && axis.dot(first.a().vec()) < 0.0 {
        (aa.axis, aa.angle)
    } else if axis.dot(first.b().vec()) < 0.0 && axis.dot(first.a().vec()) > 0.0 {
        (aa.axis.antipode(), TAU - aa.angle)
    } else {
        return None;
    };
    let u = pole.vec();
    let m = seq.len();

    let mut crossings = Vec::with_capacity(m);
    let mut points = Vec::with_capacity(m + 1);
    let mut seam = 0.0f64;
    for (k, c) in seq.crossings().iter().enumerate() {
        let arc = &dev.arcs[k];
        let hit = pole_edge_crossing(pole, arc)?;
        if u.dot(arc.b().vec()) <= 0.0 {
            return None;
        }
        let (i, lower_first) = local(spec, c);
        let t = if lower_first { hit.t } else { 1.0 - hit.t };
        if !(t > opts.vertex_tol && t < 1.0 - opts.vertex_tol) {
            return None;
        }
        let x = hit.point.vec();
        let dir = u.cross(x);
        let incidence = angle_between(dir, edge_tangent(arc, x, lower_first));

        // The same crossing seen from the chart of the face being entered.
        let back = dev.placements[k + 1].inverse();
        let j = spec.glue(c.from_face, i).local_edge;
        let there = developed_edge(spec, c.to_face, j, &Rotation3::IDENTITY);
        let g = spec.face(c.to_face);
        let there_lower_first = g[j] < g[(j + 1) % g.len()];
        let (xb, db) = (back.apply(x), back.apply(dir));
        let incidence_there = angle_between(db, edge_tangent(&there, xb, there_lower_first));
        seam = seam
            .max((incidence - incidence_there).abs())
            .max(there.distance_to_point(SpherePoint::from_direction(xb)?));

        crossings.push(CrossingPoint { edge: c.edge, t, incidence_angle: incidence });
        points.push(x);
    }

    let c0 = &seq.crossings()[0];
    let (i0, _) = local(spec, c0);
    let closing_arc = developed_edge(spec, c0.from_face, i0, &dev.closing);
    let x_end = pole_edge_crossing(pole, &closing_arc)?.point.vec();
    let drift = (x_end - dev.closing.apply(points[0])).norm();
    points.push(x_end);

    let mut total = 0.0;
    let mut segments = Vec::with_capacity(m);
    for k in 0..m {
        let gap = turn(u, points[k], points[k + 1]);
        if !(gap > 0.0 && gap < PI) {
            return None;
        }
        total += gap;
        let back = dev.placements[k + 1].inverse();
        let arc = GreatArc::new(
            SpherePoint::from_direction(back.apply(points[k]))?,
            SpherePoint::from_direction(back.apply(points[k + 1]))?,
        )
        .ok()?;
        segments.push(FaceArc { face: seq.crossings()[k].to_face, arc });
    }
    let mismatch = (total - theta).abs();
    if mismatch > opts.closure_tol || total >= TAU {
        return None;
    }

    Some(GeodesicPath {
        seq: seq.clone(),
        crossings,
        segments,
        total_length: total,
        pole,
        rotation_angle: theta,
        closure_residual: mismatch.max(drift),
        seam_residual: seam,
    })
}

/// The simple closed geodesic realizing `seq`, if there is one.
#[must_use]
pub fn solve_sequence(spec: &SolidSpec, seq: &CrossingSequence, opts: &SolveOptions) -> Option<GeodesicPath> {
    solve_closure(spec, seq, opts).filter(|p| is_simple_with(spec, p, opts.simple_tol))
}

/// No two pieces of the path meet inside a common face.
#[must_use]
pub fn is_simple(spec: &SolidSpec, path: &GeodesicPath) -> bool {
    is_simple_with(spec, path, SolveOptions::default().simple_tol)
}

fn is_simple_with(_spec: &SolidSpec, path: &GeodesicPath, tol: f64) -> bool {
    let mut by_face: BTreeMap<usize, Vec<&GreatArc>> = BTreeMap::new();
    for s in &path.segments {
        by_face.entry(s.face).or_default().push(&s.arc);
    }
    by_face
        .values()
        .all(|arcs| arcs.iter().enumerate().all(|(i, a)| arcs[i + 1..].iter().all(|b| a.distance_to_arc(b) >= tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids::{build_solid, SolidKind};
    use crate::sphtrig::PlanarAngle;
    use core::f64::consts::FRAC_PI_2;

    fn solid(kind: SolidKind, k: f64) -> SolidSpec {
        build_solid(kind, PlanarAngle::from_pi_multiple(k).unwrap()).unwrap()
    }

    fn by_vertices(s: &SolidSpec, pairs: &[(usize, usize)]) -> CrossingSequence {
        let edges: Vec<usize> = pairs.iter().map(|&(u, v)| s.edge_between(u, v).unwrap()).collect();
        CrossingSequence::from_edges(s, &edges).unwrap()
    }

    // Octahedron labels: A1..A4 around the equator, A5 and A6 the apexes.
    const OCTA_TYPE1: [(usize, usize); 6] = [(0, 1), (1, 4), (4, 2), (2, 3), (3, 5), (5, 0)];
    const OCTA_TYPE2: [(usize, usize); 8] = [(0, 1), (1, 5), (1, 2), (2, 4), (2, 3), (3, 5), (3, 0), (0, 4)];

    #[test]
    fn octa_type1_crosses_midpoints() {
        let s = solid(SolidKind::Octahedron, 0.4);
        let path = solve_sequence(&s, &by_vertices(&s, &OCTA_TYPE1), &SolveOptions::default()).unwrap();
        for c in &path.crossings {
            assert!((c.t - 0.5).abs() < 1e-9, "{c:?}");
        }
        assert!(path.closure_residual < 1e-9);
        assert!(path.seam_residual < 1e-10);
        assert!(path.total_length < TAU);
        let sum: f64 = path.segment_lengths().iter().sum();
        assert!((sum - path.total_length).abs() < 1e-9);
        assert!(is_simple(&s, &path));
    }

    #[test]
    fn octa_type2_right_angles_on_apex_edges() {
        let s = solid(SolidKind::Octahedron, 0.45);
        let path = solve_sequence(&s, &by_vertices(&s, &OCTA_TYPE2), &SolveOptions::default()).unwrap();
        for (k, c) in path.crossings.iter().enumerate() {
            if k % 2 == 1 {
                assert!((c.incidence_angle - FRAC_PI_2).abs() < 1e-9, "{k}: {c:?}");
            } else {
                assert!((c.t - 0.5).abs() < 1e-9, "{k}: {c:?}");
            }
        }
    }

    #[test]
    fn swapped_crossings_are_not_realized() {
        let s = solid(SolidKind::Octahedron, 0.4);
        let mut pairs = OCTA_TYPE1;
        pairs.swap(1, 2);
        let edges: Vec<usize> = pairs.iter().map(|&(u, v)| s.edge_between(u, v).unwrap()).collect();
        if let Ok(seq) = CrossingSequence::from_edges(&s, &edges) {
            assert!(solve_sequence(&s, &seq, &SolveOptions::default()).is_none());
        }
    }

    #[test]
    fn tetra_four_crossing_geodesic() {
        let s = solid(SolidKind::Tetrahedron, 0.6);
        // The (0,1) geodesic misses the opposite pair A1A2 / A3A4.
        let seq = by_vertices(&s, &[(0, 2), (1, 2), (1, 3), (0, 3)]);
        let path = solve_sequence(&s, &seq, &SolveOptions::default()).unwrap();
        assert!(is_simple(&s, &path));
        assert_eq!(path.crossings.len(), 4);
    }

    #[test]
    fn doubled_cycle_is_not_simple_or_too_long() {
        let s = solid(SolidKind::Octahedron, 0.4);
        let mut pairs = OCTA_TYPE1.to_vec();
        pairs.extend_from_slice(&OCTA_TYPE1);
        assert!(solve_sequence(&s, &by_vertices(&s, &pairs), &SolveOptions::default()).is_none());
    }
}
