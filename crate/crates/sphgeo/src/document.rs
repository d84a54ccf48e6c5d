//! JSON result documents.

use serde::{Deserialize, Serialize};

use sphgeo_core::counts::{CountReport, TypeVerdict};
use sphgeo_core::finder::{tag_for, Canonicalizer, CrossingPoint};
use sphgeo_core::{GeodesicClass, GeodesicPath, SolidKind, SolidSpec};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: String,
    /// Short solid name: `tetra`, `octa` or `cube`.
    pub solid: String,
    pub alpha: f64,
    pub classes: Vec<ClassRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassRecord {
    /// Edge ids in crossing order.
    pub canonical_sequence: Vec<usize>,
    pub kind_tag: String,
    pub total_length: f64,
    pub closure_residual: f64,
    pub crossings: Vec<CrossingRecord>,
    pub orbit_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub edge: usize,
    pub t: f64,
    pub incidence_angle: f64,
}

/// Counting summary for the tetrahedron.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub c1: f64,
    pub c2: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub psi1: u64,
    pub psi2: u64,
    pub vertex_loop: bool,
    pub verdicts: Vec<VerdictRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub p: u32,
    pub q: u32,
    pub s: u64,
    pub necessary_excluded: bool,
    pub sufficient: bool,
    /// Absent when the type needs more crossings than were searched.
    pub found: Option<bool>,
}

impl From<&CrossingPoint> for CrossingRecord {
    fn from(c: &CrossingPoint) -> Self {
        Self { edge: c.edge, t: c.t, incidence_angle: c.incidence_angle }
    }
}

impl From<&TypeVerdict> for VerdictRecord {
    fn from(v: &TypeVerdict) -> Self {
        Self {
            p: v.ty.p(),
            q: v.ty.q(),
            s: v.ty.s(),
            necessary_excluded: v.necessary_excluded,
            sufficient: v.sufficient,
            found: v.found,
        }
    }
}

impl From<&CountReport> for Bounds {
    fn from(r: &CountReport) -> Self {
        Self {
            c1: r.c1,
            c2: r.c2,
            n: r.n,
            psi1: r.psi1,
            psi2: r.psi2,
            vertex_loop: r.vertex_loop,
            verdicts: r.verdicts.iter().map(VerdictRecord::from).collect(),
        }
    }
}

impl ClassRecord {
    #[must_use]
    pub fn from_path(path: &GeodesicPath, kind_tag: String, orbit_size: usize) -> Self {
        Self {
            canonical_sequence: path.seq.edge_ids(),
            kind_tag,
            total_length: path.total_length,
            closure_residual: path.closure_residual,
            crossings: path.crossings.iter().map(CrossingRecord::from).collect(),
            orbit_size,
        }
    }

    #[must_use]
    pub fn from_class(c: &GeodesicClass) -> Self {
        Self::from_path(&c.representative, c.tag.to_string(), c.orbit_size)
    }

    /// Record for a single solved path, tagged and sized like its class.
    #[must_use]
    pub fn from_solved(spec: &SolidSpec, path: &GeodesicPath) -> Self {
        let orbit = Canonicalizer::new(spec).orbit_size(&path.seq);
        Self::from_path(path, tag_for(spec, path).to_string(), orbit)
    }
}

impl ResultDocument {
    #[must_use]
    pub fn new(solid: SolidKind, alpha: f64, classes: Vec<ClassRecord>, bounds: Option<Bounds>) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_owned(), solid: solid.short_name().to_owned(), alpha, classes, bounds }
    }

    /// Pretty JSON with a trailing newline.
    #[must_use]
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn awkward_floats_round_trip() {
        let doc = ResultDocument::new(
            SolidKind::Cube,
            0.6 * std::f64::consts::PI,
            vec![ClassRecord {
                canonical_sequence: vec![0, 3, 11, 8],
                kind_tag: "type 1".into(),
                total_length: 6.283185307179585,
                closure_residual: 3.3306690738754696e-16,
                crossings: vec![CrossingRecord { edge: 0, t: 0.1 + 0.2, incidence_angle: 1.0 / 3.0 }],
                orbit_size: 3,
            }],
            None,
        );
        let back = ResultDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert!(!doc.to_json().contains("bounds"));
    }
}
