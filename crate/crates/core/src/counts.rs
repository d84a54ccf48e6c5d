//! Existence bounds and counts for geodesics on the tetrahedron.
//!
//! A type `(p, q)` is measured by the quadratic form `s = p^2 + pq + q^2`.
//! A geodesic of that type cannot exist once `s >= g(alpha)` and must exist
//! when the edge is short enough for [`sufficient_exists`]. The count `N` of
//! realizable types lies between the lattice-point estimates `c1` and `c2`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_3, PI};

use libm::{asin, cos, sin, sqrt};

use crate::error::{Error, Result};
use crate::finder::{find_tetra_type, solve_sequence, GeodesicPath, GeodesicType, SearchOptions, SolveOptions};
use crate::solids::{build_solid, SolidKind, SolidSpec};
use crate::sphtrig::{tetra_edge, PlanarAngle};
use crate::unfold::CrossingSequence;

fn check_alpha(what: &'static str, alpha: f64) -> Result<f64> {
    if alpha > FRAC_PI_3 && alpha < 2.0 * FRAC_PI_3 {
        Ok(alpha)
    } else {
        Err(Error::Domain { what, value: alpha })
    }
}

fn half_sin_sq(alpha: f64) -> f64 {
    let s = sin(alpha / 2.0);
    s * s
}

/// `pi^2 cos^2 alpha / (4 S (4 S - 1))` with `S = sin^2(alpha/2)`.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    let a = check_alpha("f_alpha", alpha)?;
    let s = half_sin_sq(a);
    Ok(PI * PI * cos(a) * cos(a) / (4.0 * s * (4.0 * s - 1.0)))
}

/// `pi^2 S / (4 S - 1)` with `S = sin^2(alpha/2)`.
pub fn g_alpha(alpha: f64) -> Result<f64> {
    let a = check_alpha("g_alpha", alpha)?;
    let s = half_sin_sq(a);
    Ok(PI * PI * s / (4.0 * s - 1.0))
}

/// Lower estimate of `N`, `3 cos^2 alpha / (8 S (4 S - 1))`.
pub fn c1_alpha(alpha: f64) -> Result<f64> {
    let a = check_alpha("c1_alpha", alpha)?;
    let s = half_sin_sq(a);
    Ok(3.0 * cos(a) * cos(a) / (8.0 * s * (4.0 * s - 1.0)))
}

/// Upper estimate of `N`, `2 S / (4 S - 1) + 1`.
pub fn c2_alpha(alpha: f64) -> Result<f64> {
    let a = check_alpha("c2_alpha", alpha)?;
    let s = half_sin_sq(a);
    Ok(2.0 * s / (4.0 * s - 1.0) + 1.0)
}

/// The form `p^2 + pq + q^2` against a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticFormBound {
    pub s: u64,
    pub threshold: f64,
}

impl QuadraticFormBound {
    #[must_use]
    pub fn new(ty: GeodesicType, threshold: f64) -> Self {
        Self { s: ty.s(), threshold }
    }

    /// `s < threshold`.
    #[must_use]
    pub fn below(&self) -> bool {
        (self.s as f64) < self.threshold
    }
}

/// No geodesic of type `ty` exists: `s >= g(alpha)`.
pub fn necessary_excluded(ty: GeodesicType, alpha: f64) -> Result<bool> {
    Ok(!QuadraticFormBound::new(ty, g_alpha(alpha)?).below())
}

/// Edge length below which a geodesic of type `ty` is guaranteed.
#[must_use]
pub fn sufficient_edge_threshold(ty: GeodesicType) -> f64 {
    let s = ty.s() as f64;
    2.0 * asin(PI / (sqrt(s) + sqrt(s + 2.0 * PI * PI)))
}

/// A geodesic of type `ty` is guaranteed by the edge length alone.
pub fn sufficient_exists(ty: GeodesicType, alpha: f64) -> Result<bool> {
    let a = check_alpha("sufficient_exists", alpha)?;
    Ok(tetra_edge(PlanarAngle::new(a)?)? < sufficient_edge_threshold(ty))
}

/// Euler's totient of `0..=n` by a linear sieve; entry 0 is 0.
#[must_use]
pub fn totient_table(n: usize) -> Vec<u64> {
    let mut phi = vec![0u64; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    if n >= 1 {
        phi[1] = 1;
    }
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = i as u64 - 1;
            primes.push(i);
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                break;
            }
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    phi
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotientSum {
    /// `phi(1) + ... + phi(x)`.
    pub value: u64,
    /// `value / (3 x^2 / pi^2)`.
    pub ratio: f64,
}

#[must_use]
pub fn totient_sum(x: usize) -> TotientSum {
    let value: u64 = totient_table(x).iter().sum();
    let xf = x as f64;
    TotientSum { value, ratio: value as f64 / (3.0 / (PI * PI) * xf * xf) }
}

/// Which lattice region [`psi_count`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiPredicate {
    /// `p^2 + pq + q^2 < threshold`.
    FormBelow,
    /// `p + q < threshold`.
    SumBelow,
}

/// Coprime pairs `0 < p <= q` in the region below `threshold`.
#[must_use]
pub fn psi_count(threshold: f64, predicate: PsiPredicate) -> u64 {
    if !threshold.is_finite() || threshold <= 0.0 {
        return 0;
    }
    let holds = |p: u64, q: u64| match predicate {
        PsiPredicate::FormBelow => ((p * p + p * q + q * q) as f64) < threshold,
        PsiPredicate::SumBelow => ((p + q) as f64) < threshold,
    };
    let mut count = 0;
    let mut q = 1u64;
    // Both regions need q < threshold (and q^2 < threshold for the form).
    while (q as f64) < threshold && holds(1, q) {
        for p in 1..=q {
            if holds(p, q) && crate::finder::gcd(p as u32, q as u32) == 1 {
                count += 1;
            }
        }
        q += 1;
    }
    count
}

/// What is known about one candidate type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TypeVerdict {
    pub ty: GeodesicType,
    pub necessary_excluded: bool,
    pub sufficient: bool,
    /// Solver outcome; `None` when `4(p + q)` exceeds the search depth.
    pub found: Option<bool>,
}

/// Count of realizable types on the tetrahedron at one planar angle.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub alpha: f64,
    pub verdicts: Vec<TypeVerdict>,
    pub realizable: Vec<GeodesicType>,
    pub n: usize,
    pub c1: f64,
    pub c2: f64,
    pub psi1: u64,
    pub psi2: u64,
    /// Whether the geodesics circling a single vertex exist. They have no
    /// `(p, q)` type and are not counted in `n`.
    pub vertex_loop: bool,
}

impl CountReport {
    /// Whether every candidate was settled by the solver.
    #[must_use]
    pub fn fully_resolved(&self) -> bool {
        self.verdicts.iter().all(|v| v.found.is_some())
    }

    /// `c1 < N < c2`.
    #[must_use]
    pub fn within_envelope(&self) -> bool {
        self.c1 < self.n as f64 && (self.n as f64) < self.c2
    }
}

/// Resolves every type with `s < g(alpha)` by a targeted search. Types that
/// need more than `opts.max_crossings` crossings are left unresolved.
pub fn count_tetra(alpha: f64, opts: &SearchOptions) -> Result<CountReport> {
    let g = g_alpha(alpha)?;
    let f = f_alpha(alpha)?;
    let spec = build_solid(SolidKind::Tetrahedron, PlanarAngle::new(alpha)?)?;
    let mut verdicts = Vec::new();
    for ty in GeodesicType::below(g) {
        let found =
            if ty.crossings() <= opts.max_crossings { Some(find_tetra_type(&spec, ty, opts)?.is_some()) } else { None };
        verdicts.push(TypeVerdict {
            ty,
            necessary_excluded: necessary_excluded(ty, alpha)?,
            sufficient: sufficient_exists(ty, alpha)?,
            found,
        });
    }
    let realizable: Vec<GeodesicType> = verdicts.iter().filter(|v| v.found == Some(true)).map(|v| v.ty).collect();
    Ok(CountReport {
        alpha,
        n: realizable.len(),
        realizable,
        verdicts,
        c1: c1_alpha(alpha)?,
        c2: c2_alpha(alpha)?,
        psi1: psi_count(f, PsiPredicate::FormBelow),
        psi2: psi_count(g, PsiPredicate::FormBelow),
        vertex_loop: vertex_loop(&spec, &opts.solve).is_some(),
    })
}

/// The geodesic crossing the three edges at vertex 0, if it exists.
#[must_use]
pub fn vertex_loop(spec: &SolidSpec, opts: &SolveOptions) -> Option<GeodesicPath> {
    let edges: Vec<usize> = (0..spec.edge_count()).filter(|&e| spec.edge(e).contains(&0)).collect();
    let seq = CrossingSequence::from_edges(spec, &edges).ok()?;
    solve_sequence(spec, &seq, opts)
}

/// Search depth that covers every candidate type at `alpha`.
pub fn depth_for_candidates(alpha: f64) -> Result<usize> {
    Ok(GeodesicType::below(g_alpha(alpha)?).iter().map(|t| t.crossings()).max().unwrap_or(4))
}
