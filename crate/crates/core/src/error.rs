use core::fmt;

use crate::solids::SolidKind;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the geometric kernel and the solvers built on it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain of a closed-form formula.
    Domain { what: &'static str, value: f64 },
    /// An arccos/arcsin argument left [-1, 1] by more than the clamp tolerance.
    TrigArgument { what: &'static str, value: f64 },
    /// A vector that must be unit length is not.
    NotUnit { norm: f64 },
    /// The two endpoints of an arc coincide or are antipodal.
    DegenerateArc,
    /// Planar angle outside the open interval admitted by the solid.
    Inadmissible { kind: SolidKind, alpha: f64, lo: f64, hi: f64 },
    /// A crossing sequence violates its structural invariants.
    InvalidSequence(&'static str),
    /// A tetrahedron type `(p, q)` that is not coprime with `0 <= p <= q`.
    InvalidType { p: u32, q: u32 },
    /// Crossing counts of a tetrahedron path do not fit any `(p, q)` pattern.
    Classification,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: {value} is outside the domain"),
            Error::TrigArgument { what, value } => {
                write!(f, "{what}: trigonometric argument {value} is outside [-1, 1]")
            }
            Error::NotUnit { norm } => write!(f, "expected a unit vector, got norm {norm}"),
            Error::DegenerateArc => f.write_str("arc endpoints coincide or are antipodal"),
            Error::Inadmissible { kind, alpha, lo, hi } => {
                write!(f, "planar angle {alpha} is not admissible for the {kind}: must lie in ({lo}, {hi})")
            }
            Error::InvalidSequence(why) => write!(f, "invalid crossing sequence: {why}"),
            Error::InvalidType { p, q } => {
                write!(f, "invalid type ({p}, {q}): need coprime 0 <= p <= q")
            }
            Error::Classification => f.write_str("crossing counts do not match a (p, q, p + q) pattern"),
        }
    }
}

impl core::error::Error for Error {}
