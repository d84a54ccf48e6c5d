//! Run configuration and the exit-code contract.

use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;

use sphgeo_core::{GeodesicType, SolidKind};

/// Failure of one invocation, carrying its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments, out-of-domain angle, unreadable input: exit 2.
    Config(String),
    /// The requested geodesic does not exist at this angle: exit 3.
    NotRealizable(String),
    /// An input document failed re-verification: exit 4.
    Validation(String),
}

impl CliError {
    #[must_use]
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::NotRealizable(_) => 3,
            CliError::Validation(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::NotRealizable(m) => write!(f, "not realizable: {m}"),
            CliError::Validation(m) => write!(f, "validation failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

pub(crate) fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// Parses `"0.45pi"`, `"pi"` or plain radians such as `"1.4137"`.
pub fn parse_alpha(text: &str) -> Result<f64, CliError> {
    let t = text.trim();
    let value = match t.strip_suffix("pi") {
        Some("") => Ok(PI),
        Some(k) => k.trim().parse::<f64>().map(|k| k * PI),
        None => t.parse::<f64>(),
    }
    .map_err(|_| config_err(format!("cannot parse angle {text:?}")))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(config_err(format!("angle {text:?} is not finite")))
    }
}

/// Parses `"p,q"` into a validated type.
pub fn parse_type(text: &str) -> Result<GeodesicType, CliError> {
    let bad = || config_err(format!("type must be \"p,q\" with coprime 0 <= p <= q, got {text:?}"));
    let (p, q) = text.split_once(',').ok_or_else(bad)?;
    let (p, q) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
    GeodesicType::new(p, q).map_err(|_| bad())
}

/// Parses a comma-separated list of edge ids.
pub fn parse_edges(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',').map(|e| e.trim().parse().map_err(|_| config_err(format!("bad edge id {e:?}")))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub solid: SolidKind,
    pub alpha: f64,
    pub ty: Option<GeodesicType>,
    /// `None` leaves the depth to the command.
    pub max_crossings: Option<usize>,
    pub closure_tol: f64,
    pub vertex_tol: f64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    /// Checks the angle against the solid's open interval and the
    /// tolerances for positivity.
    pub fn validate(self) -> Result<Self, CliError> {
        check_alpha(self.solid, self.alpha)?;
        for (name, tol) in [("closure", self.closure_tol), ("vertex", self.vertex_tol)] {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(config_err(format!("{name} tolerance must be positive, got {tol}")));
            }
        }
        if self.max_crossings.is_some_and(|d| d < 3) {
            return Err(config_err("depth must be at least 3"));
        }
        Ok(self)
    }
}

pub(crate) fn check_alpha(solid: SolidKind, alpha: f64) -> Result<(), CliError> {
    if solid.is_admissible(alpha) {
        Ok(())
    } else {
        let (lo, hi) = solid.admissible_interval();
        Err(config_err(format!("alpha = {alpha} is outside ({:.6}, {:.6}) for the {solid}", lo, hi)))
    }
}
