//! Crossing sequences, developments and holonomy.
//!
//! A development lays the faces crossed by a sequence onto the unit sphere
//! one after another, starting with the chart of the first face. Each face
//! copy carries a placement: the rotation taking its canonical chart into
//! the development. The placement of the copy of the starting face reached
//! after the whole cycle is the holonomy of the sequence.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::solids::{SolidSpec, SymmetryOp};
use crate::sphtrig::{GreatArc, Rotation3};

/// Passage from one face to its neighbour through a shared edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedCrossing {
    pub from_face: usize,
    pub edge: usize,
    pub to_face: usize,
}

impl DirectedCrossing {
    #[must_use]
    pub fn reversed(self) -> Self {
        Self { from_face: self.to_face, edge: self.edge, to_face: self.from_face }
    }

    #[must_use]
    pub fn mapped(self, op: &SymmetryOp) -> Self {
        Self { from_face: op.face(self.from_face), edge: op.edge(self.edge), to_face: op.face(self.to_face) }
    }

    /// Whether `edge` is shared by the two faces in `spec`.
    #[must_use]
    pub fn is_valid(&self, spec: &SolidSpec) -> bool {
        self.from_face < spec.face_count()
            && self.edge < spec.edge_count()
            && spec
                .local_edge(self.from_face, self.edge)
                .is_some_and(|i| spec.glue(self.from_face, i).face == self.to_face)
    }
}

/// Cyclic list of crossings; the combinatorial identity of a closed geodesic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingSequence {
    crossings: Vec<DirectedCrossing>,
}

/// Shortest admissible sequence on the solids handled here.
pub const MIN_CROSSINGS: usize = 3;

impl CrossingSequence {
    /// Validates the cycle: each crossing is a real gluing, consecutive
    /// crossings share the face between them and use distinct edges.
    pub fn new(spec: &SolidSpec, crossings: Vec<DirectedCrossing>) -> Result<Self> {
        if crossings.len() < MIN_CROSSINGS {
            return Err(Error::InvalidSequence("fewer than three crossings"));
        }
        let m = crossings.len();
        for (k, c) in crossings.iter().enumerate() {
            if !c.is_valid(spec) {
                return Err(Error::InvalidSequence("crossing is not an edge gluing"));
            }
            let next = &crossings[(k + 1) % m];
            if c.to_face != next.from_face {
                return Err(Error::InvalidSequence("consecutive crossings do not share a face"));
            }
            if c.edge == next.edge {
                return Err(Error::InvalidSequence("consecutive crossings use the same edge"));
            }
        }
        Ok(Self { crossings })
    }

    /// Rebuilds a sequence from its cyclic list of edge ids.
    pub fn from_edges(spec: &SolidSpec, edges: &[usize]) -> Result<Self> {
        let m = edges.len();
        if m < MIN_CROSSINGS {
            return Err(Error::InvalidSequence("fewer than three crossings"));
        }
        if edges.iter().any(|&e| e >= spec.edge_count()) {
            return Err(Error::InvalidSequence("edge id out of range"));
        }
        let common = |e1: usize, e2: usize| -> Result<usize> {
            let [a, b] = spec.edge_faces(e1);
            let f2 = spec.edge_faces(e2);
            match (f2.contains(&a), f2.contains(&b)) {
                (true, false) => Ok(a),
                (false, true) => Ok(b),
                _ => Err(Error::InvalidSequence("consecutive edges do not bound exactly one common face")),
            }
        };
        let mut crossings = Vec::with_capacity(m);
        for k in 0..m {
            let from_face = common(edges[(k + m - 1) % m], edges[k])?;
            let to_face = common(edges[k], edges[(k + 1) % m])?;
            crossings.push(DirectedCrossing { from_face, edge: edges[k], to_face });
        }
        Self::new(spec, crossings)
    }

    /// Wraps crossings already known to be valid.
    pub(crate) fn from_raw(crossings: Vec<DirectedCrossing>) -> Self {
        Self { crossings }
    }

    #[must_use]
    pub fn crossings(&self) -> &[DirectedCrossing] {
        &self.crossings
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    #[must_use]
    pub fn edge_ids(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.edge).collect()
    }

    /// The same cycle started `s` crossings later.
    #[must_use]
    pub fn shifted(&self, s: usize) -> Self {
        let m = self.crossings.len();
        Self { crossings: (0..m).map(|k| self.crossings[(k + s) % m]).collect() }
    }

    /// The cycle traversed backwards.
    #[must_use]
    pub fn reversed(&self) -> Self {
        Self { crossings: self.crossings.iter().rev().map(|c| c.reversed()).collect() }
    }

    /// Image under a symmetry of the solid.
    #[must_use]
    pub fn mapped(&self, op: &SymmetryOp) -> Self {
        Self { crossings: self.crossings.iter().map(|c| c.mapped(op)).collect() }
    }

    /// Number of crossings on each edge.
    #[must_use]
    pub fn edge_counts(&self, edge_count: usize) -> Vec<usize> {
        let mut counts = alloc::vec![0; edge_count];
        for c in &self.crossings {
            counts[c.edge] += 1;
        }
        counts
    }
}

/// Faces of a crossing sequence laid out on the sphere.
#[derive(Debug, Clone)]
pub struct Development {
    /// `placements[k]` places the face entered by crossing `k - 1`;
    /// `placements[0]` is the identity and the last entry is the holonomy.
    pub placements: Vec<Rotation3>,
    /// Developed edge of each crossing, oriented counterclockwise around the
    /// face being left.
    pub arcs: Vec<GreatArc>,
    pub closing: Rotation3,
}

/// Placement of the face entered by `crossing`, given the placement of the
/// face it leaves.
pub fn step_rotation(spec: &SolidSpec, placement: &Rotation3, crossing: &DirectedCrossing) -> Result<Rotation3> {
    let i = spec
        .local_edge(crossing.from_face, crossing.edge)
        .ok_or(Error::InvalidSequence("crossing is not an edge gluing"))?;
    Ok(*placement * *spec.transfer(crossing.from_face, i))
}

/// Developed copy of local edge `i` of a face placed by `placement`.
pub(crate) fn developed_edge(spec: &SolidSpec, face: usize, i: usize, placement: &Rotation3) -> GreatArc {
    let chart = spec.face_chart(face);
    let n = chart.len();
    GreatArc::new(placement.apply_point(chart[i]), placement.apply_point(chart[(i + 1) % n]))
        .expect("chart edges are proper arcs")
}

/// Lays out every face of `seq` in order, starting from the chart of the
/// first crossing's face.
pub fn develop(spec: &SolidSpec, seq: &CrossingSequence) -> Result<Development> {
    let mut placements = Vec::with_capacity(seq.len() + 1);
    let mut arcs = Vec::with_capacity(seq.len());
    let mut p = Rotation3::IDENTITY;
    placements.push(p);
    for c in seq.crossings() {
        let i = spec
            .local_edge(c.from_face, c.edge)
            .filter(|&i| spec.glue(c.from_face, i).face == c.to_face)
            .ok_or(Error::InvalidSequence("crossing is not an edge gluing"))?;
        arcs.push(developed_edge(spec, c.from_face, i, &p));
        p = p * *spec.transfer(c.from_face, i);
        placements.push(p);
    }
    Ok(Development { placements, arcs, closing: p })
}

/// Closing rotation of the development of `seq`.
pub fn holonomy(spec: &SolidSpec, seq: &CrossingSequence) -> Result<Rotation3> {
    develop(spec, seq).map(|d| d.closing)
}
