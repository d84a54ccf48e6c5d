//! Simple closed geodesics on regular spherical polyhedra.
//!
//! The surfaces modelled here are the regular spherical tetrahedron,
//! octahedron and cube: each facet is a regular polygon on the unit sphere
//! with interior angle `alpha`, and the facets are glued along their edges.
//! The intrinsic metric depends only on `alpha`.
//!
//! A closed geodesic is found per edge-crossing sequence. Developing the
//! crossed facets onto the unit sphere turns the geodesic into an arc of one
//! great circle, and the composition of the per-edge unfolding rotations (the
//! holonomy) must rotate that great circle into itself. The pole of the
//! geodesic is therefore the holonomy axis and its length the holonomy
//! angle, so each sequence is realized by at most one geodesic.
//!
//! Modules:
//!
//! * [`sphtrig`] closed-form spherical trigonometry, points, rotations, arcs.
//! * [`solids`] combinatorics, face charts and symmetry groups of the solids.
//! * [`unfold`] crossing sequences, developments and holonomy.
//! * [`finder`] per-sequence solver, simplicity test, canonical forms and
//!   exhaustive enumeration.
//! * [`counts`] existence bounds and counting functions for the tetrahedron.
//! * [`audit`] residuals between solutions that symmetry forces to agree.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod audit;
pub mod counts;
mod error;
pub mod finder;
pub mod solids;
pub mod sphtrig;
pub mod unfold;

pub use error::{Error, Result};
pub use finder::{
    canonicalize, classify_tetra_type, enumerate_classes, feasible_pole_exists, find_tetra_type, is_simple,
    solve_sequence, ClassTag, GeodesicClass, GeodesicPath, GeodesicType, SearchOptions, SolveOptions,
};
pub use solids::{build_solid, cone_angle, symmetry_group, SolidKind, SolidSpec, SymmetryOp};
pub use sphtrig::{GreatArc, PlanarAngle, Rotation3, SpherePoint, Vec3};
pub use unfold::{develop, holonomy, step_rotation, CrossingSequence, Development, DirectedCrossing};
