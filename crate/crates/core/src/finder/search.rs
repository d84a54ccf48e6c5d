//! Depth-first search over crossing sequences.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::ops::ControlFlow;

use super::canon::{sequence_key, Canonicalizer, SequenceKey};
use super::feasible::PoleRegion;
use super::solve::{solve_sequence, SolveOptions};
use super::tetra::{classify_tetra_type, opposite_pairs, GeodesicType};
use super::{ClassTag, GeodesicClass, GeodesicPath};
use crate::error::{Error, Result};
use crate::solids::{SolidKind, SolidSpec};
use crate::sphtrig::{GreatArc, Rotation3};
use crate::unfold::{developed_edge, CrossingSequence, DirectedCrossing, MIN_CROSSINGS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub max_crossings: usize,
    /// Turn off to walk every combinatorial sequence up to `max_crossings`.
    pub prune: bool,
    pub solve: SolveOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { max_crossings: 12, prune: true, solve: SolveOptions::default() }
    }
}

/// How many earlier arcs each new arc is measured against for the length bound.
const BOUND_WINDOW: usize = 6;

/// Per-edge limits for a targeted tetrahedron search.
struct TypeCaps {
    pairs: [[usize; 2]; 3],
    values: [usize; 3],
}

impl TypeCaps {
    /// Some assignment of `values` to the opposite pairs still fits `counts`.
    fn admits(&self, counts: &[usize]) -> bool {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS.iter().any(|perm| {
            self.pairs.iter().zip(perm).all(|([e, f], &k)| counts[*e] <= self.values[k] && counts[*f] <= self.values[k])
        })
    }
}

struct Walker<'a> {
    spec: &'a SolidSpec,
    opts: SearchOptions,
    seq: Vec<DirectedCrossing>,
    placements: Vec<Rotation3>,
    arcs: Vec<GreatArc>,
    bounds: Vec<f64>,
    counts: Vec<usize>,
    caps: Option<TypeCaps>,
    /// Only closures of exactly this length are reported when set.
    exact: Option<usize>,
}

impl<'a> Walker<'a> {
    fn new(spec: &'a SolidSpec, opts: SearchOptions) -> Self {
        Self {
            spec,
            opts,
            seq: Vec::new(),
            placements: vec![Rotation3::IDENTITY],
            arcs: Vec::new(),
            bounds: Vec::new(),
            counts: vec![0; spec.edge_count()],
            caps: None,
            exact: None,
        }
    }

    fn lower_bound(&self, arc: &GreatArc) -> f64 {
        let k = self.arcs.len();
        let lo = k.saturating_sub(BOUND_WINDOW);
        (lo..k.saturating_sub(1)).map(|j| self.bounds[j] + self.arcs[j].distance_to_arc(arc)).fold(0.0, f64::max)
    }

    fn walk<F>(&mut self, face: usize, region: &PoleRegion, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[DirectedCrossing]) -> ControlFlow<()>,
    {
        let depth = self.seq.len();
        let limit = self.exact.unwrap_or(self.opts.max_crossings);
        if depth >= limit {
            return ControlFlow::Continue(());
        }
        let placement = *self.placements.last().expect("root placement");
        for i in 0..self.spec.kind().face_sides() {
            let edge = self.spec.face_edge(face, i);
            if self.seq.last().is_some_and(|c| c.edge == edge) {
                continue;
            }
            let to_face = self.spec.glue(face, i).face;
            self.counts[edge] += 1;
            let capped = self.caps.as_ref().is_some_and(|c| !c.admits(&self.counts));
            if capped {
                self.counts[edge] -= 1;
                continue;
            }
            let arc = developed_edge(self.spec, face, i, &placement);
            let mut next = region.clone();
            let mut bound = 0.0;
            if self.opts.prune {
                next.require_crossing(&arc.reversed());
                bound = self.lower_bound(&arc);
                if next.is_empty() || bound >= TAU {
                    self.counts[edge] -= 1;
                    continue;
                }
            }
            self.seq.push(DirectedCrossing { from_face: face, edge, to_face });
            self.placements.push(placement * *self.spec.transfer(face, i));
            self.arcs.push(arc);
            self.bounds.push(bound);

            let closes = to_face == self.seq[0].from_face
                && self.seq.len() >= MIN_CROSSINGS
                && edge != self.seq[0].edge
                && self.exact.is_none_or(|m| m == self.seq.len());
            let mut flow = ControlFlow::Continue(());
            if closes {
                flow = visit(&self.seq);
            }
            if flow.is_continue() {
                flow = self.walk(to_face, &next, visit);
            }

            self.seq.pop();
            self.placements.pop();
            self.arcs.pop();
            self.bounds.pop();
            self.counts[edge] -= 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Name of the class a path belongs to.
#[must_use]
pub fn tag_for(spec: &SolidSpec, path: &GeodesicPath) -> ClassTag {
    let m = path.seq.len();
    match spec.kind() {
        SolidKind::Tetrahedron if m == 3 => ClassTag::TetraVertexLoop,
        SolidKind::Tetrahedron => classify_tetra_type(spec, path).map_or(ClassTag::Unclassified, ClassTag::Tetra),
        SolidKind::Octahedron => match m {
            6 => ClassTag::OctaType1,
            8 => ClassTag::OctaType2,
            _ => ClassTag::Unclassified,
        },
        SolidKind::Cube => match m {
            4 => ClassTag::CubeType1,
            6 => {
                let mut touched = vec![false; spec.vertex_count()];
                for c in path.seq.crossings() {
                    for v in spec.edge(c.edge) {
                        touched[v] = true;
                    }
                }
                if touched.iter().all(|&t| t) {
                    ClassTag::CubeType3
                } else {
                    ClassTag::CubeType2
                }
            }
            _ => ClassTag::Unclassified,
        },
    }
}

/// All symmetry classes of simple closed geodesics with at most
/// `opts.max_crossings` crossings, in canonical order.
#[must_use]
pub fn enumerate_classes(spec: &SolidSpec, opts: &SearchOptions) -> Vec<GeodesicClass> {
    let canon = Canonicalizer::new(spec);
    let mut found: BTreeMap<SequenceKey, (CrossingSequence, GeodesicPath)> = BTreeMap::new();
    let mut walker = Walker::new(spec, *opts);
    let mut visit = |raw: &[DirectedCrossing]| {
        let seq = CrossingSequence::from_raw(raw.to_vec());
        if let Some(path) = solve_sequence(spec, &seq, &opts.solve) {
            let c = canon.canonicalize(&seq);
            found.entry(sequence_key(c.crossings())).or_insert((c, path));
        }
        ControlFlow::Continue(())
    };
    let _ = walker.walk(0, &PoleRegion::sphere(), &mut visit);

    found
        .into_values()
        .map(|(canonical, found_path)| {
            let representative = solve_sequence(spec, &canonical, &opts.solve).unwrap_or(found_path);
            GeodesicClass {
                orbit_size: canon.orbit_size(&canonical),
                tag: tag_for(spec, &representative),
                canonical,
                representative,
            }
        })
        .collect()
}

/// A simple closed geodesic of type `ty` on the tetrahedron, searched among
/// sequences of exactly `4(p + q)` crossings. `opts.max_crossings` is ignored.
pub fn find_tetra_type(spec: &SolidSpec, ty: GeodesicType, opts: &SearchOptions) -> Result<Option<GeodesicPath>> {
    if spec.kind() != SolidKind::Tetrahedron {
        return Err(Error::Classification);
    }
    let (p, q) = (ty.p() as usize, ty.q() as usize);
    let mut walker = Walker::new(spec, *opts);
    walker.exact = Some(ty.crossings());
    walker.caps = Some(TypeCaps { pairs: opposite_pairs(spec), values: [p, q, p + q] });
    let mut hit = None;
    let mut visit = |raw: &[DirectedCrossing]| {
        let seq = CrossingSequence::from_raw(raw.to_vec());
        match solve_sequence(spec, &seq, &opts.solve) {
            Some(path) if classify_tetra_type(spec, &path) == Ok(ty) => {
                hit = Some(path);
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        }
    };
    let _ = walker.walk(0, &PoleRegion::sphere(), &mut visit);
    Ok(hit)
}
