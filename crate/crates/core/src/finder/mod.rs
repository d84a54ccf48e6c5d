//! Closed geodesics per crossing sequence, and exhaustive search for them.
//!
//! [`solve_sequence`] decides whether one crossing sequence is realized by a
//! simple closed geodesic. [`enumerate_classes`] walks crossing sequences
//! depth first from face 0, pruning prefixes for which no pole can make the
//! developed equator cross every edge in order ([`feasible_pole_exists`]) or
//! whose developed edges are already 2pi apart. Results are grouped into
//! symmetry classes by [`canonicalize`].

mod canon;
mod feasible;
mod search;
mod solve;
mod tetra;

use alloc::vec::Vec;
use core::fmt;

use crate::solids::{SolidSpec, SymmetryOp};
use crate::sphtrig::{GreatArc, SpherePoint};
use crate::unfold::CrossingSequence;

pub use canon::{canonicalize, cyclic_normal, sequence_key, Canonicalizer, Relation, SequenceKey};
pub use feasible::{feasible_pole_exists, PoleRegion, FEASIBILITY_MARGIN};
pub use search::{enumerate_classes, find_tetra_type, tag_for, SearchOptions};
pub use solve::{is_simple, solve_closure, solve_sequence, SolveOptions};
pub use tetra::{classify_tetra_type, gcd, opposite_pairs, type_from_counts, GeodesicType};

/// Where the geodesic crosses one edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingPoint {
    pub edge: usize,
    /// Fraction of the edge length from its lower-numbered vertex.
    pub t: f64,
    /// Angle between the direction of travel and the edge directed from its
    /// lower-numbered vertex, in `(0, pi)`.
    pub incidence_angle: f64,
}

impl CrossingPoint {
    /// The same crossing seen through a symmetry: `t` and the angle are
    /// mirrored when the symmetry swaps the edge's end labels.
    #[must_use]
    pub fn mapped(&self, spec: &SolidSpec, op: &SymmetryOp) -> Self {
        let [a, b] = spec.edge(self.edge);
        let edge = op.edge(self.edge);
        if op.vertex(a) < op.vertex(b) {
            Self { edge, ..*self }
        } else {
            Self { edge, t: 1.0 - self.t, incidence_angle: core::f64::consts::PI - self.incidence_angle }
        }
    }
}

/// Piece of the geodesic inside one face, in that face's chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceArc {
    pub face: usize,
    pub arc: GreatArc,
}

/// A closed geodesic realizing a crossing sequence.
#[derive(Debug, Clone)]
pub struct GeodesicPath {
    pub seq: CrossingSequence,
    pub crossings: Vec<CrossingPoint>,
    /// `segments[k]` runs from crossing `k` to crossing `k + 1`.
    pub segments: Vec<FaceArc>,
    pub total_length: f64,
    /// Pole of the developed great circle; travel is counterclockwise about it.
    pub pole: SpherePoint,
    /// Holonomy rotation angle, measured about `pole`.
    pub rotation_angle: f64,
    pub closure_residual: f64,
    /// Largest disagreement between the two sides of an edge, in position
    /// or incidence angle.
    pub seam_residual: f64,
}

impl GeodesicPath {
    #[must_use]
    pub fn segment_lengths(&self) -> Vec<f64> {
        self.segments.iter().map(|s| s.arc.length()).collect()
    }
}

/// Name of a symmetry class within the solid's known families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Tetra(GeodesicType),
    /// Tetrahedron geodesic around a single vertex, crossing only the three
    /// edges there; it closes up once the planar angle exceeds pi/2.
    TetraVertexLoop,
    OctaType1,
    OctaType2,
    CubeType1,
    CubeType2,
    CubeType3,
    Unclassified,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Tetra(t) => write!(f, "type {t}"),
            ClassTag::TetraVertexLoop => f.write_str("vertex loop"),
            ClassTag::OctaType1 | ClassTag::CubeType1 => f.write_str("type 1"),
            ClassTag::OctaType2 | ClassTag::CubeType2 => f.write_str("type 2"),
            ClassTag::CubeType3 => f.write_str("type 3"),
            ClassTag::Unclassified => f.write_str("unclassified"),
        }
    }
}

/// One symmetry class of simple closed geodesics.
#[derive(Debug, Clone)]
pub struct GeodesicClass {
    pub canonical: CrossingSequence,
    pub representative: GeodesicPath,
    /// Number of distinct geodesics in the class.
    pub orbit_size: usize,
    pub tag: ClassTag,
}
