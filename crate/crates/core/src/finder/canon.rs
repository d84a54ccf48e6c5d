//! Canonical forms of crossing sequences under shifts, reversal and symmetry.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::solids::{symmetry_group, SolidSpec, SymmetryOp};
use crate::unfold::{CrossingSequence, DirectedCrossing};

pub type SequenceKey = Vec<(usize, usize, usize)>;

/// Comparison key: `(edge, from_face, to_face)` per crossing. Edge ids follow
/// the order of their `(lower, higher)` vertex pairs.
#[must_use]
pub fn sequence_key(seq: &[DirectedCrossing]) -> SequenceKey {
    seq.iter().map(|c| (c.edge, c.from_face, c.to_face)).collect()
}

fn min_shift(seq: &[DirectedCrossing]) -> (usize, SequenceKey) {
    let key = sequence_key(seq);
    let m = key.len();
    let mut best = 0;
    for s in 1..m {
        for k in 0..m {
            let (x, y) = (key[(s + k) % m], key[(best + k) % m]);
            if x != y {
                if x < y {
                    best = s;
                }
                break;
            }
        }
    }
    let rotated = (0..m).map(|k| key[(best + k) % m]).collect();
    (best, rotated)
}

/// Least form over cyclic shifts and reversal, ignoring symmetries.
#[must_use]
pub fn cyclic_normal(seq: &CrossingSequence) -> CrossingSequence {
    let fwd = min_shift(seq.crossings());
    let rev_seq = seq.reversed();
    let rev = min_shift(rev_seq.crossings());
    if rev.1 < fwd.1 {
        rev_seq.shifted(rev.0)
    } else {
        seq.shifted(fwd.0)
    }
}

/// How one sequence is carried onto another: apply `group[op]`, reverse
/// if asked, then start `shift` crossings later.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub op: usize,
    pub reversed: bool,
    pub shift: usize,
}

/// Symmetry group of one solid, kept for repeated canonicalization.
#[derive(Debug, Clone)]
pub struct Canonicalizer {
    group: Vec<SymmetryOp>,
}

impl Canonicalizer {
    #[must_use]
    pub fn new(spec: &SolidSpec) -> Self {
        Self { group: symmetry_group(spec) }
    }

    #[must_use]
    pub fn group(&self) -> &[SymmetryOp] {
        &self.group
    }

    /// Least form over all shifts, reversal and symmetry images.
    #[must_use]
    pub fn canonicalize(&self, seq: &CrossingSequence) -> CrossingSequence {
        self.group
            .iter()
            .map(|g| cyclic_normal(&seq.mapped(g)))
            .min_by(|a, b| sequence_key(a.crossings()).cmp(&sequence_key(b.crossings())))
            .expect("group contains the identity")
    }

    /// Number of distinct geodesics the symmetries make out of `seq`.
    #[must_use]
    pub fn orbit_size(&self, seq: &CrossingSequence) -> usize {
        self.group
            .iter()
            .map(|g| sequence_key(cyclic_normal(&seq.mapped(g)).crossings()))
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Orbit size under orientation-preserving symmetries only. Differs from
    /// [`Self::orbit_size`] exactly when the geodesic is chiral.
    #[must_use]
    pub fn rotation_orbit_size(&self, seq: &CrossingSequence) -> usize {
        self.group
            .iter()
            .filter(|g| g.is_rotation())
            .map(|g| sequence_key(cyclic_normal(&seq.mapped(g)).crossings()))
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// First relation (in group order) taking `from` onto `to`.
    #[must_use]
    pub fn relate(&self, from: &CrossingSequence, to: &CrossingSequence) -> Option<Relation> {
        if from.len() != to.len() {
            return None;
        }
        let m = from.len();
        for (op, g) in self.group.iter().enumerate() {
            let image = from.mapped(g);
            for reversed in [false, true] {
                let oriented = if reversed { image.reversed() } else { image.clone() };
                for shift in 0..m {
                    if oriented.shifted(shift) == *to {
                        return Some(Relation { op, reversed, shift });
                    }
                }
            }
        }
        None
    }
}

/// Canonical form of `seq`; builds the symmetry group on each call.
#[must_use]
pub fn canonicalize(spec: &SolidSpec, seq: &CrossingSequence) -> CrossingSequence {
    Canonicalizer::new(spec).canonicalize(seq)
}
