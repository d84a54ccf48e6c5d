use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use sphgeo_core::counts::{count_tetra, depth_for_candidates, necessary_excluded, sufficient_exists, vertex_loop};
use sphgeo_core::finder::{sequence_key, tag_for, Canonicalizer};
use sphgeo_core::sphtrig::tetra_edge;
use sphgeo_core::*;

fn solid(kind: SolidKind, k: f64) -> SolidSpec {
    build_solid(kind, PlanarAngle::from_pi_multiple(k).unwrap()).unwrap()
}

fn seq_of(s: &SolidSpec, pairs: &[(usize, usize)]) -> CrossingSequence {
    let edges: Vec<usize> = pairs.iter().map(|&(u, v)| s.edge_between(u, v).unwrap()).collect();
    CrossingSequence::from_edges(s, &edges).unwrap()
}

fn check_invariants(path: &GeodesicPath) {
    assert!(path.total_length < TAU);
    assert!(path.closure_residual < 1e-9);
    assert!(path.seam_residual < 1e-10, "seam {}", path.seam_residual);
    let sum: f64 = path.segment_lengths().iter().sum();
    assert!((sum - path.total_length).abs() < 1e-9);
    assert!((path.total_length - path.rotation_angle).abs() < 1e-9);
    for c in &path.crossings {
        assert!(c.t > 1e-9 && c.t < 1.0 - 1e-9);
        assert!(c.incidence_angle > 0.0 && c.incidence_angle < PI);
    }
}

#[test]
fn octahedron_has_two_classes() {
    for k in [0.35, 0.4, 0.45] {
        let s = solid(SolidKind::Octahedron, k);
        let classes = enumerate_classes(&s, &SearchOptions::default());
        let mut sizes: Vec<(usize, usize)> = classes.iter().map(|c| (c.canonical.len(), c.orbit_size)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(6, 4), (8, 6)], "alpha = {k} pi");
        for c in &classes {
            check_invariants(&c.representative);
            assert!(is_simple(&s, &c.representative));
        }
    }
}

#[test]
fn octahedron_constructions() {
    let s = solid(SolidKind::Octahedron, 0.4);
    let canon = Canonicalizer::new(&s);
    let type1 = seq_of(&s, &[(0, 1), (1, 4), (4, 2), (2, 3), (3, 5), (5, 0)]);
    let type2 = seq_of(&s, &[(0, 1), (1, 5), (1, 2), (2, 4), (2, 3), (3, 5), (3, 0), (0, 4)]);
    let found: BTreeSet<_> = enumerate_classes(&s, &SearchOptions::default())
        .iter()
        .map(|c| sequence_key(c.canonical.crossings()))
        .collect();
    let built: BTreeSet<_> = [type1, type2].iter().map(|q| sequence_key(canon.canonicalize(q).crossings())).collect();
    assert_eq!(found, built);
}

#[test]
fn cube_has_three_classes() {
    for k in [0.55, 0.6] {
        let s = solid(SolidKind::Cube, k);
        let classes = enumerate_classes(&s, &SearchOptions::default());
        let mut sizes: Vec<(usize, usize)> = classes.iter().map(|c| (c.canonical.len(), c.orbit_size)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![(4, 3), (6, 4), (6, 12)], "alpha = {k} pi");
        let tags: BTreeSet<ClassTag> = classes.iter().map(|c| c.tag).collect();
        assert_eq!(tags, [ClassTag::CubeType1, ClassTag::CubeType2, ClassTag::CubeType3].into());
        for c in &classes {
            check_invariants(&c.representative);
        }
    }
}

#[test]
fn cube_type3_sequence() {
    let s = solid(SolidKind::Cube, 0.6);
    // A2A3, A2A'2, A1A'1, A'1A'4, A'3A'4, A3A4.
    let seq = seq_of(&s, &[(1, 2), (1, 5), (0, 4), (4, 7), (6, 7), (2, 3)]);
    let path = solve_sequence(&s, &seq, &SolveOptions::default()).unwrap();
    assert_eq!(tag_for(&s, &path), ClassTag::CubeType3);
    assert_eq!(Canonicalizer::new(&s).orbit_size(&seq), 12);
}

#[test]
fn tetrahedron_above_right_angle() {
    let s = solid(SolidKind::Tetrahedron, 0.6);
    let classes = enumerate_classes(&s, &SearchOptions::default());
    let tags: Vec<(ClassTag, usize)> = classes.iter().map(|c| (c.tag, c.orbit_size)).collect();
    assert_eq!(tags.len(), 2);
    assert!(tags.contains(&(ClassTag::Tetra(GeodesicType::new(0, 1).unwrap()), 3)));
    assert!(tags.contains(&(ClassTag::TetraVertexLoop, 4)));
}

#[test]
fn vertex_loop_closed_form() {
    // The loop is the circle at distance pi/2 from the vertex: it meets each
    // edge there at a right angle and has length 3 alpha.
    for k in [0.51, 0.55, 0.6, 0.65] {
        let s = solid(SolidKind::Tetrahedron, k);
        let path = vertex_loop(&s, &SolveOptions::default()).unwrap();
        let a_t = tetra_edge(s.alpha()).unwrap();
        for c in &path.crossings {
            assert!((c.t * a_t - FRAC_PI_2).abs() < 1e-9);
            assert!((c.incidence_angle - FRAC_PI_2).abs() < 1e-9);
        }
        assert!((path.total_length - 3.0 * k * PI).abs() < 1e-9);
    }
    for k in [0.35, 0.45, 0.49] {
        assert!(vertex_loop(&solid(SolidKind::Tetrahedron, k), &SolveOptions::default()).is_none());
    }
}

#[test]
fn tetra_type01_crosses_midpoints() {
    let s = solid(SolidKind::Tetrahedron, 0.6);
    let path = find_tetra_type(&s, GeodesicType::new(0, 1).unwrap(), &SearchOptions::default()).unwrap().unwrap();
    check_invariants(&path);
    for c in &path.crossings {
        assert!((c.t - 0.5).abs() < 1e-9);
    }
}

/// Crossing sequence of the `(p, q)` geodesic on the flat tetrahedron: a
/// straight line through the labelled triangular tiling in direction
/// `2p e1 + 2q e2`.
fn tiling_sequence(s: &SolidSpec, p: u32, q: u32) -> CrossingSequence {
    let label = |i: i64, j: i64| (i.rem_euclid(2) + 2 * j.rem_euclid(2)) as usize;
    let (du, dw) = (2.0 * f64::from(p), 2.0 * f64::from(q));
    let (u0, w0) = (0.1234567, 0.3456789);
    let mut events: Vec<(f64, usize, usize)> = Vec::new();
    let mut push = |t: f64, a: (i64, i64), b: (i64, i64)| {
        events.push((t, label(a.0, a.1), label(b.0, b.1)));
    };
    let at = |t: f64| (u0 + du * t, w0 + dw * t);
    for n in (u0.floor() as i64 + 1)..=((u0 + du).floor() as i64) {
        if du > 0.0 {
            let t = (n as f64 - u0) / du;
            let w = at(t).1.floor() as i64;
            push(t, (n, w), (n, w + 1));
        }
    }
    for n in (w0.floor() as i64 + 1)..=((w0 + dw).floor() as i64) {
        let t = (n as f64 - w0) / dw;
        let u = at(t).0.floor() as i64;
        push(t, (u, n), (u + 1, n));
    }
    let s0 = u0 + w0;
    for n in (s0.floor() as i64 + 1)..=((s0 + du + dw).floor() as i64) {
        let t = (n as f64 - s0) / (du + dw);
        let u = at(t).0.floor() as i64;
        push(t, (u, n - u), (u + 1, n - u - 1));
    }
    events.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let edges: Vec<usize> = events.iter().map(|&(_, a, b)| s.edge_between(a, b).unwrap()).collect();
    CrossingSequence::from_edges(s, &edges).unwrap()
}

#[test]
fn targeted_search_matches_tiling() {
    let s = solid(SolidKind::Tetrahedron, 0.34);
    let canon = Canonicalizer::new(&s);
    for (p, q) in [(0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (1, 4)] {
        let ty = GeodesicType::new(p, q).unwrap();
        let oracle = tiling_sequence(&s, p, q);
        assert_eq!(oracle.len(), ty.crossings());
        let path = find_tetra_type(&s, ty, &SearchOptions::default()).unwrap().expect("type exists near pi/3");
        check_invariants(&path);
        assert_eq!(classify_tetra_type(&s, &path).unwrap(), ty);
        assert_eq!(canon.canonicalize(&path.seq), canon.canonicalize(&oracle), "type {ty}");
        // Types with 0 < p < q are chiral: three mirror pairs under the full group.
        assert_eq!(canon.rotation_orbit_size(&oracle), 3);
        assert_eq!(canon.orbit_size(&oracle), if p == 0 || p == q { 3 } else { 6 });
    }
}

#[test]
fn tetra_counts() {
    for k in [0.55, 0.6, 0.65] {
        let r = count_tetra(k * PI, &SearchOptions::default()).unwrap();
        assert_eq!(r.n, 1);
        assert_eq!(r.realizable, vec![GeodesicType::new(0, 1).unwrap()]);
        assert!(r.vertex_loop);
    }
    let r = count_tetra(0.45 * PI, &SearchOptions::default()).unwrap();
    assert!(r.n >= 1 && r.c1 < r.n as f64 && (r.n as f64) < r.c2);
    let r = count_tetra(0.35 * PI, &SearchOptions { max_crossings: 24, ..Default::default() }).unwrap();
    assert!(r.n >= 2);
    for ty in [(0, 1), (1, 1)] {
        let ty = GeodesicType::new(ty.0, ty.1).unwrap();
        assert!(sufficient_exists(ty, 0.35 * PI).unwrap());
        assert!(r.realizable.contains(&ty));
    }
}

#[test]
fn tetra_enumeration_near_flat() {
    let s = solid(SolidKind::Tetrahedron, 0.35);
    let classes = enumerate_classes(&s, &SearchOptions { max_crossings: 24, ..Default::default() });
    assert!(classes.len() >= 2);
    let canon = Canonicalizer::new(&s);
    for c in &classes {
        let ClassTag::Tetra(ty) = c.tag else { panic!("untyped class {:?}", c.tag) };
        assert_eq!(canon.rotation_orbit_size(&c.canonical), 3);
        assert_eq!(c.orbit_size, if ty.p() == 0 || ty.p() == ty.q() { 3 } else { 6 });
    }
    let types: BTreeSet<(u32, u32)> = classes
        .iter()
        .filter_map(|c| match c.tag {
            ClassTag::Tetra(t) => Some((t.p(), t.q())),
            _ => None,
        })
        .collect();
    assert_eq!(types, [(0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (1, 4)].into());
}

#[test]
fn verdicts_agree_with_solver() {
    let types = GeodesicType::below(40.0);
    for k in 1..20 {
        let a = FRAC_PI_3 + k as f64 * FRAC_PI_3 / 20.0;
        let s = build_solid(SolidKind::Tetrahedron, PlanarAngle::new(a).unwrap()).unwrap();
        for &ty in &types {
            let suf = sufficient_exists(ty, a).unwrap();
            let exc = necessary_excluded(ty, a).unwrap();
            if suf || exc {
                let found = find_tetra_type(&s, ty, &SearchOptions::default()).unwrap().is_some();
                assert!(!suf || found, "{ty} should exist at {a}");
                assert!(!exc || !found, "{ty} should not exist at {a}");
            }
        }
    }
}

#[test]
fn candidate_depth_covers_grid() {
    for k in 1..30 {
        let a = FRAC_PI_3 + k as f64 * PI / 90.0;
        let d = depth_for_candidates(a).unwrap();
        let r = count_tetra(a, &SearchOptions { max_crossings: d, ..Default::default() }).unwrap();
        assert!(r.fully_resolved());
        assert!(r.within_envelope(), "alpha = {a}: {} not in ({}, {})", r.n, r.c1, r.c2);
    }
}
