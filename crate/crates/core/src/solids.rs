//! Combinatorial and metric model of the regular spherical solids.
//!
//! Vertex labels follow the usual figures: the tetrahedron is `A1..A4`; the
//! octahedron has the square `A1A2A3A4` with apex `A5` and bottom `A6`; the
//! cube has front facet `A1A2A3A4` and back facet `A'1A'2A'3A'4`, with the
//! edges `AkA'k` joining them. Ids are zero based in that order, so `A'k`
//! is id `3 + k` on the cube.
//!
//! The combinatorics and the symmetry group are read off a Euclidean model
//! with integer coordinates. The spherical metric lives only in the face
//! chart: every facet is the same regular spherical polygon centred on the
//! north pole with local vertex 0 on the prime meridian and local vertices
//! counterclockwise seen from outside.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};
use core::fmt;

use crate::error::{Error, Result};
use crate::sphtrig::{circumradius, cube_edge, rot_about, tetra_edge, PlanarAngle, Rotation3, SpherePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolidKind {
    Tetrahedron,
    Octahedron,
    Cube,
}

impl SolidKind {
    pub const ALL: [SolidKind; 3] = [SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Cube];

    /// Open interval of planar angles for which the solid is a genuine
    /// polyhedron (the upper end is the round sphere).
    #[must_use]
    pub fn admissible_interval(self) -> (f64, f64) {
        match self {
            SolidKind::Tetrahedron => (FRAC_PI_3, 2.0 * FRAC_PI_3),
            SolidKind::Octahedron => (FRAC_PI_3, FRAC_PI_2),
            SolidKind::Cube => (FRAC_PI_2, 2.0 * FRAC_PI_3),
        }
    }

    #[must_use]
    pub fn is_admissible(self, alpha: f64) -> bool {
        let (lo, hi) = self.admissible_interval();
        alpha > lo && alpha < hi
    }

    /// Sides per face.
    #[must_use]
    pub fn face_sides(self) -> usize {
        match self {
            SolidKind::Cube => 4,
            _ => 3,
        }
    }

    /// Faces around each vertex.
    #[must_use]
    pub fn vertex_degree(self) -> usize {
        match self {
            SolidKind::Octahedron => 4,
            _ => 3,
        }
    }

    /// Short name used on the command line and in documents.
    #[must_use]
    pub fn short_name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetra",
            SolidKind::Octahedron => "octa",
            SolidKind::Cube => "cube",
        }
    }

    #[must_use]
    pub fn from_short_name(s: &str) -> Option<Self> {
        SolidKind::ALL.into_iter().find(|k| k.short_name() == s)
    }

    fn model(self) -> Vec<[i32; 3]> {
        match self {
            SolidKind::Tetrahedron => vec![[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
            SolidKind::Octahedron => vec![[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
            SolidKind::Cube => {
                vec![[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1], [1, 1, -1], [-1, 1, -1], [-1, -1, -1], [1, -1, -1]]
            }
        }
    }

    /// Outward normals of the supporting planes of the faces of the model.
    fn face_normals(self) -> Vec<[i32; 3]> {
        match self {
            SolidKind::Tetrahedron => self.model().iter().map(|v| [-v[0], -v[1], -v[2]]).collect(),
            SolidKind::Octahedron => {
                let mut out = Vec::new();
                for sx in [1, -1] {
                    for sy in [1, -1] {
                        for sz in [1, -1] {
                            out.push([sx, sy, sz]);
                        }
                    }
                }
                out
            }
            SolidKind::Cube => vec![[0, 0, 1], [0, 0, -1], [1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]],
        }
    }

    /// Two generators of the full isometry group of the model.
    fn generators(self) -> [IntMatrix; 2] {
        const C3: IntMatrix = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];
        match self {
            // C3 and the rotoreflection S4 about z.
            SolidKind::Tetrahedron => [C3, [[0, -1, 0], [1, 0, 0], [0, 0, -1]]],
            // Quarter turn about z and -C3; (-C3)^3 is the central inversion.
            SolidKind::Octahedron | SolidKind::Cube => {
                [[[0, -1, 0], [1, 0, 0], [0, 0, 1]], [[0, 0, -1], [-1, 0, 0], [0, -1, 0]]]
            }
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Octahedron => "octahedron",
            SolidKind::Cube => "cube",
        })
    }
}

type IntMatrix = [[i32; 3]; 3];

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut m = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

fn mat_apply(a: &IntMatrix, v: &[i32; 3]) -> [i32; 3] {
    let mut out = [0; 3];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..3).map(|k| a[i][k] * v[k]).sum();
    }
    out
}

fn mat_det(m: &IntMatrix) -> i32 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Where a directed edge of a face is glued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Glue {
    pub face: usize,
    pub local_edge: usize,
    /// The shared edge runs in opposite directions in the two faces. Always
    /// true for a consistently oriented surface.
    pub flip: bool,
}

/// One solid at one planar angle.
#[derive(Debug, Clone)]
pub struct SolidSpec {
    kind: SolidKind,
    alpha: PlanarAngle,
    model: Vec<[i32; 3]>,
    faces: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
    face_edges: Vec<Vec<usize>>,
    gluing: Vec<Vec<Glue>>,
    face_chart: Vec<Vec<SpherePoint>>,
    edge_length: f64,
    circumradius: f64,
    /// `transfer[f][i]`: chart of the neighbour across local edge `i` of `f`,
    /// expressed in the chart of `f`.
    transfer: Vec<Vec<Rotation3>>,
}

impl SolidSpec {
    #[must_use]
    pub fn kind(&self) -> SolidKind {
        self.kind
    }

    #[must_use]
    pub fn alpha(&self) -> PlanarAngle {
        self.alpha
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.model.len()
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Vertex ids of a face, counterclockwise from outside.
    #[must_use]
    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    #[must_use]
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Endpoints of an edge, smaller id first. Edge ids follow this order.
    #[must_use]
    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    #[must_use]
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Edge id of local edge `i` (local vertex `i` to `i + 1`) of face `f`.
    #[must_use]
    pub fn face_edge(&self, f: usize, i: usize) -> usize {
        self.face_edges[f][i]
    }

    #[must_use]
    pub fn face_edges(&self, f: usize) -> &[usize] {
        &self.face_edges[f]
    }

    /// Local index of edge `e` in face `f`, if `f` contains it.
    #[must_use]
    pub fn local_edge(&self, f: usize, e: usize) -> Option<usize> {
        self.face_edges[f].iter().position(|&x| x == e)
    }

    #[must_use]
    pub fn glue(&self, f: usize, i: usize) -> Glue {
        self.gluing[f][i]
    }

    /// The two faces sharing edge `e`, in increasing order.
    #[must_use]
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        let mut out = [usize::MAX; 2];
        let mut k = 0;
        for (f, fe) in self.face_edges.iter().enumerate() {
            if fe.contains(&e) {
                out[k] = f;
                k += 1;
            }
        }
        out
    }

    /// Edge id joining two vertices, if any.
    #[must_use]
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let key = [u.min(v), u.max(v)];
        self.edges.binary_search(&key).ok()
    }

    /// Canonical chart of face `f`.
    #[must_use]
    pub fn face_chart(&self, f: usize) -> &[SpherePoint] {
        &self.face_chart[f]
    }

    #[must_use]
    pub fn edge_length(&self) -> f64 {
        self.edge_length
    }

    #[must_use]
    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    /// Chart-to-chart rotation for leaving face `f` through local edge `i`.
    #[must_use]
    pub fn transfer(&self, f: usize, i: usize) -> &Rotation3 {
        &self.transfer[f][i]
    }

    /// Position of a vertex in the integer Euclidean model.
    #[must_use]
    pub fn model_position(&self, v: usize) -> [i32; 3] {
        self.model[v]
    }

    /// Faces containing vertex `v`, in counterclockwise order around it.
    #[must_use]
    pub fn faces_around(&self, v: usize) -> Vec<usize> {
        let start = (0..self.faces.len()).find(|&f| self.faces[f].contains(&v)).expect("every vertex lies on a face");
        let mut out = vec![start];
        let mut f = start;
        loop {
            // Leave through the local edge ending at v; the neighbour holds it as the edge starting at v.
            let n = self.faces[f].len();
            let k = self.faces[f].iter().position(|&x| x == v).expect("v on f");
            let prev = (k + n - 1) % n;
            let g = self.gluing[f][prev].face;
            if g == start {
                return out;
            }
            out.push(g);
            f = g;
        }
    }
}

/// Builds the solid of the given kind with planar angle `alpha`.
pub fn build_solid(kind: SolidKind, alpha: PlanarAngle) -> Result<SolidSpec> {
    let a = alpha.radians();
    if !kind.is_admissible(a) {
        let (lo, hi) = kind.admissible_interval();
        return Err(Error::Inadmissible { kind, alpha: a, lo, hi });
    }
    let model = kind.model();
    let n = kind.face_sides();

    let mut faces = Vec::new();
    for normal in kind.face_normals() {
        let dot = |v: &[i32; 3]| v[0] * normal[0] + v[1] * normal[1] + v[2] * normal[2];
        let best = model.iter().map(dot).max().expect("nonempty model");
        let members: Vec<usize> = (0..model.len()).filter(|&i| dot(&model[i]) == best).collect();
        faces.push(order_ccw(&model, &members, normal));
    }

    let mut edge_set = BTreeSet::new();
    for f in &faces {
        for i in 0..n {
            let (u, v) = (f[i], f[(i + 1) % n]);
            edge_set.insert([u.min(v), u.max(v)]);
        }
    }
    let edges: Vec<[usize; 2]> = edge_set.into_iter().collect();
    let face_edges: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            (0..n)
                .map(|i| {
                    let (u, v) = (f[i], f[(i + 1) % n]);
                    edges.binary_search(&[u.min(v), u.max(v)]).expect("edge listed")
                })
                .collect()
        })
        .collect();

    let mut gluing = Vec::with_capacity(faces.len());
    for (f, fv) in faces.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            let (u, v) = (fv[i], fv[(i + 1) % n]);
            let (g, j, flip) = faces
                .iter()
                .enumerate()
                .filter(|&(g, _)| g != f)
                .find_map(|(g, gv)| {
                    (0..n).find_map(|j| {
                        let (x, y) = (gv[j], gv[(j + 1) % n]);
                        if (x, y) == (v, u) {
                            Some((g, j, true))
                        } else if (x, y) == (u, v) {
                            Some((g, j, false))
                        } else {
                            None
                        }
                    })
                })
                .expect("closed surface: every edge has a partner");
            row.push(Glue { face: g, local_edge: j, flip });
        }
        gluing.push(row);
    }

    let edge_length = match kind {
        SolidKind::Cube => cube_edge(alpha)?,
        _ => tetra_edge(alpha)?,
    };
    let rho = circumradius(n, alpha)?;
    let chart: Vec<SpherePoint> = (0..n).map(|k| SpherePoint::from_polar(rho, TAU * k as f64 / n as f64)).collect();

    // Half turn about the midpoint of chart edge 0 swaps its endpoints and
    // carries the face to the far side of the edge.
    let mid0 = SpherePoint::from_direction(chart[0].vec() + chart[1].vec()).expect("proper edge");
    let half_turn = rot_about(mid0.vec(), PI)?;
    let step = TAU / n as f64;
    let transfer = gluing
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(i, glue)| {
                    Rotation3::about_z(step * i as f64) * half_turn * Rotation3::about_z(-step * glue.local_edge as f64)
                })
                .collect()
        })
        .collect();

    Ok(SolidSpec {
        kind,
        alpha,
        face_chart: vec![chart; faces.len()],
        model,
        faces,
        edges,
        face_edges,
        gluing,
        edge_length,
        circumradius: rho,
        transfer,
    })
}

/// Sorts coplanar vertices counterclockwise about the outward normal,
/// starting from the smallest id.
fn order_ccw(model: &[[i32; 3]], members: &[usize], normal: [i32; 3]) -> Vec<usize> {
    let nv = [normal[0] as f64, normal[1] as f64, normal[2] as f64];
    let centroid = members.iter().fold([0.0; 3], |acc, &i| {
        [acc[0] + model[i][0] as f64, acc[1] + model[i][1] as f64, acc[2] + model[i][2] as f64]
    });
    let c = centroid.map(|x| x / members.len() as f64);
    let first = *members.iter().min().expect("nonempty face");
    let rel = |i: usize| [model[i][0] as f64 - c[0], model[i][1] as f64 - c[1], model[i][2] as f64 - c[2]];
    let e1 = rel(first);
    let e2 = [nv[1] * e1[2] - nv[2] * e1[1], nv[2] * e1[0] - nv[0] * e1[2], nv[0] * e1[1] - nv[1] * e1[0]];
    let angle = |i: usize| {
        let r = rel(i);
        let x = r[0] * e1[0] + r[1] * e1[1] + r[2] * e1[2];
        let y = r[0] * e2[0] + r[1] * e2[1] + r[2] * e2[2];
        let t = libm::atan2(y, x);
        if t < -1e-12 {
            t + TAU
        } else {
            t.max(0.0)
        }
    };
    let mut out = members.to_vec();
    out.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
    out
}

/// A combinatorial isometry of a solid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryOp {
    matrix: IntMatrix,
    vertex_perm: Vec<usize>,
    edge_perm: Vec<usize>,
    face_perm: Vec<usize>,
}

impl SymmetryOp {
    /// Orientation preserving.
    #[must_use]
    pub fn is_rotation(&self) -> bool {
        mat_det(&self.matrix) > 0
    }

    #[must_use]
    pub fn vertex(&self, v: usize) -> usize {
        self.vertex_perm[v]
    }

    #[must_use]
    pub fn edge(&self, e: usize) -> usize {
        self.edge_perm[e]
    }

    #[must_use]
    pub fn face(&self, f: usize) -> usize {
        self.face_perm[f]
    }

    #[must_use]
    pub fn vertex_perm(&self) -> &[usize] {
        &self.vertex_perm
    }

    /// Action on the integer model; orthogonal with entries in {-1, 0, 1}.
    #[must_use]
    pub fn matrix(&self) -> [[i32; 3]; 3] {
        self.matrix
    }

    /// `self` after `other`.
    #[must_use]
    pub fn compose(&self, other: &SymmetryOp) -> SymmetryOp {
        SymmetryOp {
            matrix: mat_mul(&self.matrix, &other.matrix),
            vertex_perm: other.vertex_perm.iter().map(|&v| self.vertex_perm[v]).collect(),
            edge_perm: other.edge_perm.iter().map(|&e| self.edge_perm[e]).collect(),
            face_perm: other.face_perm.iter().map(|&f| self.face_perm[f]).collect(),
        }
    }

    /// Whether the op maps the gluing of `spec` onto itself.
    #[must_use]
    pub fn preserves_gluing(&self, spec: &SolidSpec) -> bool {
        (0..spec.face_count()).all(|f| {
            let g = self.face(f);
            (0..spec.kind().face_sides()).all(|i| {
                let e = spec.face_edge(f, i);
                let glue = spec.glue(f, i);
                let ge = self.edge(e);
                let [u, v] = spec.edge(e);
                let mapped = [self.vertex(u), self.vertex(v)];
                spec.local_edge(g, ge).is_some()
                    && spec.local_edge(self.face(glue.face), ge).is_some()
                    && spec.edge(ge) == [mapped[0].min(mapped[1]), mapped[0].max(mapped[1])]
            })
        })
    }

    fn from_matrix(spec: &SolidSpec, matrix: IntMatrix) -> Option<SymmetryOp> {
        let nv = spec.vertex_count();
        let mut vertex_perm = Vec::with_capacity(nv);
        for v in 0..nv {
            let image = mat_apply(&matrix, &spec.model[v]);
            vertex_perm.push(spec.model.iter().position(|p| *p == image)?);
        }
        let edge_perm = spec
            .edges
            .iter()
            .map(|&[u, v]| spec.edge_between(vertex_perm[u], vertex_perm[v]))
            .collect::<Option<Vec<_>>>()?;
        let face_perm = spec
            .faces
            .iter()
            .map(|fv| {
                let mut image: Vec<usize> = fv.iter().map(|&v| vertex_perm[v]).collect();
                image.sort_unstable();
                spec.faces.iter().position(|g| {
                    let mut s = g.clone();
                    s.sort_unstable();
                    s == image
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SymmetryOp { matrix, vertex_perm, edge_perm, face_perm })
    }
}

/// Full isometry group, closed from two generators. The identity comes first
/// and the rest follow in discovery order.
#[must_use]
pub fn symmetry_group(spec: &SolidSpec) -> Vec<SymmetryOp> {
    let gens = spec.kind.generators();
    let identity: IntMatrix = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut mats = vec![identity];
    let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
    seen.insert(identity);
    let mut frontier = 0;
    while frontier < mats.len() {
        let m = mats[frontier];
        frontier += 1;
        for g in &gens {
            let p = mat_mul(g, &m);
            if seen.insert(p) {
                mats.push(p);
            }
        }
    }
    mats.into_iter().map(|m| SymmetryOp::from_matrix(spec, m).expect("generator preserves the model")).collect()
}

/// Total facet angle at a vertex: degree times `alpha`.
#[must_use]
pub fn cone_angle(spec: &SolidSpec, vertex: usize) -> f64 {
    debug_assert!(vertex < spec.vertex_count());
    spec.kind.vertex_degree() as f64 * spec.alpha.radians()
}
