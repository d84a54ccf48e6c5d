use std::f64::consts::PI;
use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use sphgeo_core::audit::{
    closed_walk, equivariance_residual, pruning_discrepancies, reversal_residual, shift_conjugacy_residual,
    uniqueness_residual,
};
use sphgeo_core::finder::Canonicalizer;
use sphgeo_core::sphtrig::{axis_angle, pole_edge_crossing, rot_about};
use sphgeo_core::{
    build_solid, enumerate_classes, holonomy, solve_sequence, symmetry_group, CrossingSequence, GeodesicClass,
    GreatArc, PlanarAngle, SearchOptions, SolidKind, SolidSpec, SolveOptions, SpherePoint, SymmetryOp, Vec3,
};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed_cafe), failure_persistence: None, ..Config::default() }
}

fn alpha_at(kind: SolidKind, u: f64) -> f64 {
    let (lo, hi) = kind.admissible_interval();
    lo + (hi - lo) * u
}

fn solid_at(kind: SolidKind, u: f64) -> SolidSpec {
    build_solid(kind, PlanarAngle::new(alpha_at(kind, u)).unwrap()).unwrap()
}

struct Grid {
    canon: Canonicalizer,
    points: Vec<(SolidSpec, Vec<GeodesicClass>)>,
}

const GRID: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

fn grid(kind: SolidKind) -> &'static Grid {
    static CELLS: [OnceLock<Grid>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = SolidKind::ALL.iter().position(|&k| k == kind).unwrap();
    CELLS[i].get_or_init(|| {
        let points: Vec<_> = GRID
            .iter()
            .map(|&u| {
                let s = solid_at(kind, u);
                let classes = enumerate_classes(&s, &SearchOptions::default());
                assert!(!classes.is_empty());
                (s, classes)
            })
            .collect();
        Grid { canon: Canonicalizer::new(&points[0].0), points }
    })
}

/// Picks a grid point, a class there and an image of its canonical sequence.
fn image_case(
    kind: SolidKind,
    pick: (usize, usize, usize, bool, usize),
) -> (&'static SolidSpec, CrossingSequence, CrossingSequence, usize) {
    let g = grid(kind);
    let (spec, classes) = &g.points[pick.0 % g.points.len()];
    let seq = classes[pick.1 % classes.len()].canonical.clone();
    let op = pick.2 % g.canon.group().len();
    let mut image = seq.mapped(&g.canon.group()[op]);
    if pick.3 {
        image = image.reversed();
    }
    let image = image.shifted(pick.4 % seq.len());
    (spec, seq, image, op)
}

fn pick() -> impl Strategy<Value = (usize, usize, usize, bool, usize)> {
    (any::<usize>(), any::<usize>(), any::<usize>(), any::<bool>(), any::<usize>())
}

fn check_uniqueness(kind: SolidKind, p: (usize, usize, usize, bool, usize)) -> Result<(), TestCaseError> {
    let (spec, seq, image, _) = image_case(kind, p);
    let opts = SolveOptions::default();
    let r = uniqueness_residual(spec, &grid(kind).canon, &seq, &image, &opts);
    prop_assert!(r.is_some_and(|r| r < 1e-9), "residual {r:?}");
    let (a, b) = (solve_sequence(spec, &image, &opts).unwrap(), solve_sequence(spec, &image, &opts).unwrap());
    prop_assert_eq!(a.crossings, b.crossings);
    Ok(())
}

fn check_equivariance(kind: SolidKind, p: (usize, usize, usize, bool, usize)) -> Result<(), TestCaseError> {
    let (spec, _, image, op) = image_case(kind, p);
    let g = &grid(kind).canon.group()[op];
    let r = equivariance_residual(spec, &image, g, &SolveOptions::default());
    prop_assert!(r.is_some_and(|r| r < 1e-9), "residual {r:?}");
    Ok(())
}

fn check_holonomy(kind: SolidKind, u: f64, choices: &[usize], s: usize, op: usize) -> Result<(), TestCaseError> {
    let spec = solid_at(kind, u);
    let Some(seq) = closed_walk(&spec, choices) else {
        return Err(TestCaseError::reject("walk did not close"));
    };
    let h = holonomy(&spec, &seq).unwrap();
    prop_assert!((h.determinant() - 1.0).abs() < 1e-12);
    prop_assert!(h.orthonormality_residual() < 1e-12);
    let r = shift_conjugacy_residual(&spec, &seq, s % seq.len()).unwrap();
    prop_assert!(r < 1e-10, "shift residual {r}");
    let angle = axis_angle(&h).angle;
    let shifted = axis_angle(&holonomy(&spec, &seq.shifted(s % seq.len())).unwrap()).angle;
    prop_assert!((angle - shifted).abs() < 1e-10);
    prop_assert!(reversal_residual(&spec, &seq).unwrap() < 1e-10);
    let rotations: Vec<SymmetryOp> = symmetry_group(&spec).into_iter().filter(SymmetryOp::is_rotation).collect();
    let g = &rotations[op % rotations.len()];
    let image = axis_angle(&holonomy(&spec, &seq.mapped(g)).unwrap()).angle;
    prop_assert!((angle - image).abs() < 1e-10, "{angle} vs {image}");
    Ok(())
}

fn check_pruning(kind: SolidKind, u: f64, depth: usize) -> Result<(), TestCaseError> {
    let spec = solid_at(kind, u);
    let missed = pruning_discrepancies(&spec, depth, SolveOptions::default());
    prop_assert!(missed.is_empty(), "alpha {} depth {depth}: {missed:?}", spec.alpha().radians());
    Ok(())
}

macro_rules! per_solid {
    ($name:ident, $kind:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #![proptest_config(config(1000))]

                #[test]
                fn uniqueness(p in pick()) {
                    check_uniqueness($kind, p)?;
                }

                #[test]
                fn equivariance(p in pick()) {
                    check_equivariance($kind, p)?;
                }

                #[test]
                fn holonomy_conjugacy(
                    u in 0.01f64..0.99,
                    choices in prop::collection::vec(any::<usize>(), 80),
                    s in any::<usize>(),
                    op in any::<usize>(),
                ) {
                    check_holonomy($kind, u, &choices, s, op)?;
                }

                #[test]
                fn pruning_is_sound(u in 0.01f64..0.99, depth in 3usize..=8) {
                    check_pruning($kind, u, depth)?;
                }
            }
        }
    };
}

per_solid!(tetrahedron, SolidKind::Tetrahedron);
per_solid!(octahedron, SolidKind::Octahedron);
per_solid!(cube, SolidKind::Cube);

fn unit_vec() -> impl Strategy<Value = Vec3> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0).prop_filter_map("near zero", |(x, y, z)| {
        Vec3::new(x, y, z).normalized().filter(|_| x * x + y * y + z * z > 1e-3)
    })
}

proptest! {
    #![proptest_config(config(10_000))]

    #[test]
    fn axis_angle_round_trip(axis in unit_vec(), angle in 1e-6f64..(PI - 1e-3)) {
        let aa = axis_angle(&rot_about(axis, angle).unwrap());
        prop_assert!((aa.angle - angle).abs() < 1e-10);
        prop_assert!((aa.axis.vec() - axis).norm() < 1e-10);
    }

    #[test]
    fn crossing_matches_bisection(u in unit_vec(), a in unit_vec(), b in unit_vec()) {
        // Reflect b through the equator of u when both ends are on one side.
        let b = if u.dot(a) * u.dot(b) > 0.0 { b - u * (2.0 * u.dot(b)) } else { b };
        let (a, b) = (SpherePoint::try_from_vec(a).unwrap(), SpherePoint::from_direction(b).unwrap());
        let pole = SpherePoint::try_from_vec(u).unwrap();
        let Ok(arc) = GreatArc::new(a, b) else { return Err(TestCaseError::reject("degenerate")) };
        let (fa, fb) = (u.dot(a.vec()), u.dot(b.vec()));
        prop_assume!(fa * fb < -1e-6);
        let got = pole_edge_crossing(pole, &arc).expect("endpoints on opposite sides");
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if (u.dot(arc.point_at(mid).vec()) > 0.0) == (fa > 0.0) { lo = mid } else { hi = mid }
        }
        prop_assert!((got.t - 0.5 * (lo + hi)).abs() < 1e-9, "{} vs {}", got.t, lo);
    }
}
