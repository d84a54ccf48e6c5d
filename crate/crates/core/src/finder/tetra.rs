//! `(p, q)` types of geodesics on the tetrahedron.

use core::fmt;

use super::GeodesicPath;
use crate::error::{Error, Result};
use crate::solids::{SolidKind, SolidSpec};

/// Type of a tetrahedron geodesic: it crosses two opposite edges `p` times
/// each, two more `q` times each and the last pair `p + q` times each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeodesicType {
    p: u32,
    q: u32,
}

#[must_use]
pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl GeodesicType {
    /// Requires `gcd(p, q) = 1` and `p <= q`.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p > q || gcd(p, q) != 1 {
            return Err(Error::InvalidType { p, q });
        }
        Ok(Self { p, q })
    }

    #[must_use]
    pub fn p(self) -> u32 {
        self.p
    }

    #[must_use]
    pub fn q(self) -> u32 {
        self.q
    }

    /// The quadratic form `p^2 + pq + q^2`.
    #[must_use]
    pub fn s(self) -> u64 {
        let (p, q) = (u64::from(self.p), u64::from(self.q));
        p * p + p * q + q * q
    }

    /// Total number of edge crossings, `4(p + q)`.
    #[must_use]
    pub fn crossings(self) -> usize {
        4 * (self.p + self.q) as usize
    }

    /// All types with `s(p, q) < bound`, ordered by `(s, p)`.
    #[must_use]
    pub fn below(bound: f64) -> alloc::vec::Vec<GeodesicType> {
        let mut out = alloc::vec::Vec::new();
        let mut q = 1u32;
        while f64::from(q * q) < bound {
            for p in 0..=q {
                if let Ok(t) = GeodesicType::new(p, q) {
                    if (t.s() as f64) < bound {
                        out.push(t);
                    }
                }
            }
            q += 1;
        }
        out.sort_by_key(|t| (t.s(), t.p));
        out
    }
}

impl fmt::Display for GeodesicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// The three pairs of opposite (vertex-disjoint) edges of the tetrahedron.
#[must_use]
pub fn opposite_pairs(spec: &SolidSpec) -> [[usize; 2]; 3] {
    let mut out = [[0; 2]; 3];
    let mut k = 0;
    for e in 0..spec.edge_count() {
        let [a, b] = spec.edge(e);
        for f in e + 1..spec.edge_count() {
            let [c, d] = spec.edge(f);
            if a != c && a != d && b != c && b != d {
                out[k] = [e, f];
                k += 1;
            }
        }
    }
    out
}

/// Reads the type off per-edge crossing counts.
pub fn type_from_counts(spec: &SolidSpec, counts: &[usize]) -> Result<GeodesicType> {
    let mut per_pair = [0usize; 3];
    for (slot, [e, f]) in per_pair.iter_mut().zip(opposite_pairs(spec)) {
        if counts[e] != counts[f] {
            return Err(Error::Classification);
        }
        *slot = counts[e];
    }
    per_pair.sort_unstable();
    let [p, q, r] = per_pair;
    if p + q != r || q == 0 {
        return Err(Error::Classification);
    }
    let (p, q) =
        (u32::try_from(p).map_err(|_| Error::Classification)?, u32::try_from(q).map_err(|_| Error::Classification)?);
    GeodesicType::new(p, q).map_err(|_| Error::Classification)
}

/// Type of a geodesic on the tetrahedron.
pub fn classify_tetra_type(spec: &SolidSpec, path: &GeodesicPath) -> Result<GeodesicType> {
    if spec.kind() != SolidKind::Tetrahedron {
        return Err(Error::Classification);
    }
    type_from_counts(spec, &path.seq.edge_counts(spec.edge_count()))
}
