//! Consistency checks between related solutions.
//!
//! Each function compares two computations that must agree exactly in
//! theory and returns the largest numerical discrepancy, so callers pick
//! their own tolerance. Symmetric images, reversals and shifts of one
//! sequence describe the same geodesic; their solutions and holonomies are
//! tied together in closed form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::Result;
use crate::finder::{
    enumerate_classes, sequence_key, solve_sequence, Canonicalizer, CrossingPoint, GeodesicPath, Relation,
    SearchOptions, SequenceKey, SolveOptions,
};
use crate::solids::{SolidSpec, SymmetryOp};
use crate::unfold::{develop, CrossingSequence, DirectedCrossing};

/// Crossings of `path` as seen after `rel`: apply the symmetry, reverse the
/// direction of travel if asked, then start `shift` crossings later.
#[must_use]
pub fn transported(spec: &SolidSpec, group: &[SymmetryOp], path: &GeodesicPath, rel: Relation) -> Vec<CrossingPoint> {
    let op = &group[rel.op];
    let mut pts: Vec<CrossingPoint> = path.crossings.iter().map(|c| c.mapped(spec, op)).collect();
    if rel.reversed {
        pts.reverse();
        for c in &mut pts {
            c.incidence_angle = PI - c.incidence_angle;
        }
    }
    let m = pts.len();
    (0..m).map(|k| pts[(k + rel.shift) % m]).collect()
}

/// Largest difference in `t` or incidence angle; infinite when the
/// crossings are on different edges.
#[must_use]
pub fn crossing_residual(a: &[CrossingPoint], b: &[CrossingPoint]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).fold(0.0, |acc, (x, y)| {
        if x.edge != y.edge {
            f64::INFINITY
        } else {
            acc.max((x.t - y.t).abs()).max((x.incidence_angle - y.incidence_angle).abs())
        }
    })
}

/// Solves `seq` and `image` (which must be related by the symmetry group)
/// and compares the solutions through the relating transformation.
///
/// `None` when neither sequence is realized or they are unrelated. A
/// sequence realized while its image is not gives an infinite residual.
#[must_use]
pub fn uniqueness_residual(
    spec: &SolidSpec,
    canon: &Canonicalizer,
    seq: &CrossingSequence,
    image: &CrossingSequence,
    opts: &SolveOptions,
) -> Option<f64> {
    let rel = canon.relate(seq, image)?;
    match (solve_sequence(spec, seq, opts), solve_sequence(spec, image, opts)) {
        (None, None) => None,
        (Some(a), Some(b)) => {
            let moved = transported(spec, canon.group(), &a, rel);
            Some(crossing_residual(&moved, &b.crossings).max((a.total_length - b.total_length).abs()))
        }
        _ => Some(f64::INFINITY),
    }
}

/// `solve(g . seq)` against `g . solve(seq)`; `None` when `seq` has no
/// solution.
#[must_use]
pub fn equivariance_residual(
    spec: &SolidSpec,
    seq: &CrossingSequence,
    op: &SymmetryOp,
    opts: &SolveOptions,
) -> Option<f64> {
    let path = solve_sequence(spec, seq, opts)?;
    let Some(image) = solve_sequence(spec, &seq.mapped(op), opts) else {
        return Some(f64::INFINITY);
    };
    let moved: Vec<CrossingPoint> = path.crossings.iter().map(|c| c.mapped(spec, op)).collect();
    Some(crossing_residual(&moved, &image.crossings).max((path.total_length - image.total_length).abs()))
}

/// Starting the cycle `s` crossings later conjugates the holonomy by the
/// placement of face `s`: `H' = P_s^-1 H P_s`. Returns the largest entry
/// difference.
pub fn shift_conjugacy_residual(spec: &SolidSpec, seq: &CrossingSequence, s: usize) -> Result<f64> {
    let dev = develop(spec, seq)?;
    let shifted = develop(spec, &seq.shifted(s))?;
    let p = dev.placements[s % seq.len()];
    Ok((p.inverse() * dev.closing * p).max_abs_diff(&shifted.closing))
}

/// Traversing the cycle backwards inverts the holonomy.
pub fn reversal_residual(spec: &SolidSpec, seq: &CrossingSequence) -> Result<f64> {
    let fwd = develop(spec, seq)?.closing;
    let back = develop(spec, &seq.reversed())?.closing;
    Ok((back * fwd).max_abs_diff(&crate::sphtrig::Rotation3::IDENTITY))
}

/// Closed walk from face 0 steered by `choices`: at each face the next
/// choice (modulo the number of edges other than the one just crossed)
/// picks the exit. Stops at the first return to face 0 that forms a valid
/// cycle; `None` if the choices run out first.
#[must_use]
pub fn closed_walk(spec: &SolidSpec, choices: &[usize]) -> Option<CrossingSequence> {
    let sides = spec.kind().face_sides();
    let mut walk: Vec<DirectedCrossing> = Vec::new();
    let mut face = 0;
    for &c in choices {
        let exits: Vec<usize> =
            (0..sides).map(|i| spec.face_edge(face, i)).filter(|&e| walk.last().is_none_or(|l| l.edge != e)).collect();
        let edge = exits[c % exits.len()];
        let i = spec.local_edge(face, edge).expect("edge of this face");
        let to_face = spec.glue(face, i).face;
        walk.push(DirectedCrossing { from_face: face, edge, to_face });
        face = to_face;
        if face == 0 && walk.len() >= 3 && walk[0].edge != edge {
            return CrossingSequence::new(spec, walk).ok();
        }
    }
    None
}

/// Canonical sequences found by exactly one of the pruned and the
/// exhaustive enumeration up to `max_crossings`; empty when they agree.
#[must_use]
pub fn pruning_discrepancies(spec: &SolidSpec, max_crossings: usize, solve: SolveOptions) -> Vec<CrossingSequence> {
    let run = |prune| {
        enumerate_classes(spec, &SearchOptions { max_crossings, prune, solve })
            .into_iter()
            .map(|c| (sequence_key(c.canonical.crossings()), c.canonical))
            .collect::<Vec<_>>()
    };
    let pruned = run(true);
    let full = run(false);
    let keys = |v: &[(SequenceKey, CrossingSequence)]| v.iter().map(|(k, _)| k.clone()).collect::<BTreeSet<_>>();
    let (kp, kf) = (keys(&pruned), keys(&full));
    pruned
        .into_iter()
        .filter(|(k, _)| !kf.contains(k))
        .chain(full.into_iter().filter(|(k, _)| !kp.contains(k)))
        .map(|(_, s)| s)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids::{build_solid, SolidKind};
    use crate::sphtrig::PlanarAngle;

    #[test]
    fn octa_type1_images_agree() {
        let s = build_solid(SolidKind::Octahedron, PlanarAngle::from_pi_multiple(0.4).unwrap()).unwrap();
        let canon = Canonicalizer::new(&s);
        let pairs = [(0, 1), (1, 4), (4, 2), (2, 3), (3, 5), (5, 0)];
        let e: Vec<usize> = pairs.iter().map(|&(u, v)| s.edge_between(u, v).unwrap()).collect();
        let seq = CrossingSequence::from_edges(&s, &e).unwrap();
        let opts = SolveOptions::default();
        for (i, g) in canon.group().iter().enumerate() {
            let image = seq.mapped(g).reversed().shifted(i % 6);
            assert!(uniqueness_residual(&s, &canon, &seq, &image, &opts).unwrap() < 1e-9);
            assert!(equivariance_residual(&s, &seq, g, &opts).unwrap() < 1e-9);
        }
        for k in 0..6 {
            assert!(shift_conjugacy_residual(&s, &seq, k).unwrap() < 1e-12);
        }
        assert!(reversal_residual(&s, &seq).unwrap() < 1e-12);
    }

    #[test]
    fn walk_closes_on_tetra() {
        let s = build_solid(SolidKind::Tetrahedron, PlanarAngle::from_pi_multiple(0.4).unwrap()).unwrap();
        let choices: Vec<usize> = (0..32).map(|k| k * 7 % 5).collect();
        let seq = closed_walk(&s, &choices).unwrap();
        assert_eq!(seq.crossings()[0].from_face, 0);
        assert!(closed_walk(&s, &[]).is_none());
    }
}
