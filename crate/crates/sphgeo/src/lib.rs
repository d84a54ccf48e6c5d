//! Command-line driver for `sphgeo-core`.
//!
//! Four commands share one set of options:
//!
//! * `solve` realizes a single geodesic (a tetrahedron type or an explicit
//!   edge sequence).
//! * `enumerate` lists every symmetry class up to a crossing depth.
//! * `sweep` tabulates the tetrahedron counts over a range of angles as CSV.
//! * `export` re-verifies a saved document and draws one class as SVG.
//!
//! Exit codes: 0 success, 2 configuration or domain error, 3 geodesic not
//! realizable, 4 input document failed verification.

pub mod config;
pub mod document;
pub mod svg;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use sphgeo_core::counts::{count_tetra, depth_for_candidates, necessary_excluded, CountReport};
use sphgeo_core::{
    build_solid, enumerate_classes, find_tetra_type, solve_sequence, CrossingSequence, GeodesicPath, PlanarAngle,
    SearchOptions, SolidKind, SolidSpec, SolveOptions,
};

pub use config::{parse_alpha, parse_edges, parse_type, CliError, Format, RunConfig};
pub use document::{Bounds, ClassRecord, CrossingRecord, ResultDocument, VerdictRecord};

use config::{check_alpha, config_err};

/// Default crossing depth for `enumerate`.
pub const DEFAULT_DEPTH: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "sphgeo", version, about = "Simple closed geodesics on regular spherical polyhedra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Realize one geodesic: `--type p,q` on the tetrahedron, `--sequence` elsewhere.
    Solve(SolveArgs),
    /// List every symmetry class with at most `--depth` crossings.
    Enumerate(CommonArgs),
    /// Tetrahedron counts over a range of angles.
    Sweep(SweepArgs),
    /// Verify a saved document and draw one of its classes.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SolidArg {
    Tetra,
    Octa,
    Cube,
}

impl From<SolidArg> for SolidKind {
    fn from(s: SolidArg) -> Self {
        match s {
            SolidArg::Tetra => SolidKind::Tetrahedron,
            SolidArg::Octa => SolidKind::Octahedron,
            SolidArg::Cube => SolidKind::Cube,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Tolerances {
    #[arg(long = "tol-closure", default_value_t = 1e-9)]
    pub closure: f64,
    #[arg(long = "tol-vertex", default_value_t = 1e-9)]
    pub vertex: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    /// Planar angle: radians, or a multiple of pi such as `0.45pi`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Largest number of edge crossings searched.
    #[arg(long)]
    pub depth: Option<usize>,
    #[command(flatten)]
    pub tol: Tolerances,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Tetrahedron type as `p,q`.
    #[arg(long = "type")]
    pub ty: Option<String>,
    /// Comma-separated edge ids, in crossing order.
    #[arg(long)]
    pub sequence: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "tetra")]
    pub solid: SolidArg,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    #[arg(long)]
    pub step: String,
    /// Fixed search depth; by default each angle searches deep enough for
    /// every candidate type.
    #[arg(long)]
    pub depth: Option<usize>,
    #[command(flatten)]
    pub tol: Tolerances,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    /// Document written by `solve` or `enumerate`.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Index of the class to draw.
    #[arg(long, default_value_t = 0)]
    pub class: usize,
    #[arg(long = "tol-closure", default_value_t = 1e-9)]
    pub closure_tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
}

impl CommonArgs {
    pub fn to_config(&self) -> Result<RunConfig, CliError> {
        RunConfig {
            solid: self.solid.into(),
            alpha: parse_alpha(&self.alpha)?,
            ty: None,
            max_crossings: self.depth,
            closure_tol: self.tol.closure,
            vertex_tol: self.tol.vertex,
            out: self.out.clone(),
            format: self.format,
        }
        .validate()
    }
}

impl RunConfig {
    fn solve_options(&self) -> SolveOptions {
        SolveOptions { closure_tol: self.closure_tol, vertex_tol: self.vertex_tol, ..SolveOptions::default() }
    }

    fn search_options(&self, depth: usize) -> SearchOptions {
        SearchOptions { max_crossings: depth, solve: self.solve_options(), ..SearchOptions::default() }
    }

    fn spec(&self) -> Result<SolidSpec, CliError> {
        let alpha = PlanarAngle::new(self.alpha).map_err(|e| config_err(e.to_string()))?;
        build_solid(self.solid, alpha).map_err(|e| config_err(e.to_string()))
    }
}

/// Output of one command, before it is written anywhere.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Document(ResultDocument),
    Csv(String),
    Svg(String),
}

impl Output {
    #[must_use]
    pub fn render(&self) -> String {
        match self {
            Output::Document(d) => d.to_json(),
            Output::Csv(s) | Output::Svg(s) => s.clone(),
        }
    }
}

/// Tetrahedron counts at the search depth `depth`, or deep enough for all
/// candidates when `None`.
fn tetra_bounds(cfg: &RunConfig, depth: Option<usize>) -> Result<CountReport, CliError> {
    let depth = match depth {
        Some(d) => d,
        None => depth_for_candidates(cfg.alpha).map_err(|e| config_err(e.to_string()))?,
    };
    count_tetra(cfg.alpha, &cfg.search_options(depth)).map_err(|e| config_err(e.to_string()))
}

fn finish_single(
    cfg: &RunConfig,
    spec: &SolidSpec,
    doc: ResultDocument,
    path: &GeodesicPath,
) -> Result<Output, CliError> {
    match cfg.format {
        Format::Json => Ok(Output::Document(doc)),
        Format::Svg => Ok(Output::Svg(svg::render(spec, path))),
        Format::Csv => Err(config_err("csv output is only available for sweep")),
    }
}

pub fn cmd_solve(args: &SolveArgs) -> Result<Output, CliError> {
    let mut cfg = args.common.to_config()?;
    let spec = cfg.spec()?;
    let opts = cfg.solve_options();
    let (path, bounds) = match (cfg.solid, &args.ty, &args.sequence) {
        (SolidKind::Tetrahedron, Some(t), None) => {
            let ty = parse_type(t)?;
            cfg.ty = Some(ty);
            if necessary_excluded(ty, cfg.alpha).map_err(|e| config_err(e.to_string()))? {
                return Err(CliError::NotRealizable(format!(
                    "type {ty} has s = {} >= g(alpha) and cannot close at alpha = {}",
                    ty.s(),
                    cfg.alpha
                )));
            }
            let found = find_tetra_type(&spec, ty, &cfg.search_options(ty.crossings()))
                .map_err(|e| config_err(e.to_string()))?;
            let path = found.ok_or_else(|| {
                CliError::NotRealizable(format!("no simple closed geodesic of type {ty} at alpha = {}", cfg.alpha))
            })?;
            (path, Some(Bounds::from(&tetra_bounds(&cfg, cfg.max_crossings)?)))
        }
        (_, None, Some(edges)) => {
            let seq =
                CrossingSequence::from_edges(&spec, &parse_edges(edges)?).map_err(|e| config_err(e.to_string()))?;
            let path = solve_sequence(&spec, &seq, &opts)
                .ok_or_else(|| CliError::NotRealizable(format!("sequence {edges} has no simple closed geodesic")))?;
            (path, None)
        }
        (SolidKind::Tetrahedron, None, None) => return Err(config_err("solve on the tetrahedron needs --type p,q")),
        (_, None, None) => return Err(config_err("solve needs --sequence with edge ids")),
        (SolidKind::Tetrahedron, Some(_), Some(_)) => return Err(config_err("give either --type or --sequence")),
        (_, Some(_), _) => return Err(config_err("--type applies to the tetrahedron only")),
    };
    let doc = ResultDocument::new(cfg.solid, cfg.alpha, vec![ClassRecord::from_solved(&spec, &path)], bounds);
    finish_single(&cfg, &spec, doc, &path)
}

pub fn cmd_enumerate(args: &CommonArgs) -> Result<Output, CliError> {
    let cfg = args.to_config()?;
    let spec = cfg.spec()?;
    let depth = cfg.max_crossings.unwrap_or(DEFAULT_DEPTH);
    let classes = enumerate_classes(&spec, &cfg.search_options(depth));
    let bounds =
        if cfg.solid == SolidKind::Tetrahedron { Some(Bounds::from(&tetra_bounds(&cfg, None)?)) } else { None };
    let doc = ResultDocument::new(cfg.solid, cfg.alpha, classes.iter().map(ClassRecord::from_class).collect(), bounds);
    match classes.first() {
        Some(c) => finish_single(&cfg, &spec, doc, &c.representative),
        None if cfg.format == Format::Svg => Err(config_err("no classes to draw")),
        None => Ok(Output::Document(doc)),
    }
}

/// Angles `from + k step` up to `to` inclusive, with a little slack for
/// rounding in the last step.
fn sweep_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !step.is_finite() || step <= 0.0 {
        return Err(config_err("step must be positive"));
    }
    if from > to {
        return Err(config_err(format!("empty range: from {from} > to {to}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| from + k as f64 * step).collect())
}

fn join_types<'a>(it: impl Iterator<Item = &'a sphgeo_core::counts::TypeVerdict>) -> String {
    it.map(|v| format!("{}:{}", v.ty.p(), v.ty.q())).collect::<Vec<_>>().join(";")
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Output, CliError> {
    let solid: SolidKind = args.solid.into();
    if solid != SolidKind::Tetrahedron {
        return Err(config_err("sweep tabulates tetrahedron counts only"));
    }
    if args.format != Format::Csv {
        return Err(config_err("sweep writes csv"));
    }
    let grid = sweep_grid(parse_alpha(&args.from)?, parse_alpha(&args.to)?, parse_alpha(&args.step)?)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let header =
        ["alpha_radians", "N", "c1", "c2", "types_found", "types_excluded", "types_unresolved", "within_envelope"];
    w.write_record(header).map_err(|e| config_err(e.to_string()))?;
    for alpha in grid {
        check_alpha(solid, alpha)?;
        let cfg = RunConfig {
            solid,
            alpha,
            ty: None,
            max_crossings: args.depth,
            closure_tol: args.tol.closure,
            vertex_tol: args.tol.vertex,
            out: None,
            format: Format::Csv,
        }
        .validate()?;
        let r = tetra_bounds(&cfg, cfg.max_crossings)?;
        let row = [
            alpha.to_string(),
            r.n.to_string(),
            r.c1.to_string(),
            r.c2.to_string(),
            join_types(r.verdicts.iter().filter(|v| v.found == Some(true))),
            join_types(r.verdicts.iter().filter(|v| v.found == Some(false))),
            join_types(r.verdicts.iter().filter(|v| v.found.is_none())),
            r.within_envelope().to_string(),
        ];
        w.write_record(&row).map_err(|e| config_err(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| config_err(e.to_string()))?;
    Ok(Output::Csv(String::from_utf8(bytes).expect("csv of ascii fields")))
}

/// Re-solves one class of a saved document and checks it against the
/// stored numbers before drawing it.
pub fn cmd_export(args: &ExportArgs) -> Result<Output, CliError> {
    if args.format != Format::Svg {
        return Err(config_err("export writes svg"));
    }
    let text = fs::read_to_string(&args.input)
        .map_err(|e| config_err(format!("cannot read {}: {e}", args.input.display())))?;
    let doc = ResultDocument::from_json(&text).map_err(|e| config_err(format!("bad document: {e}")))?;
    if doc.schema_version != document::SCHEMA_VERSION {
        return Err(config_err(format!("unsupported schema version {:?}", doc.schema_version)));
    }
    let solid =
        SolidKind::from_short_name(&doc.solid).ok_or_else(|| config_err(format!("unknown solid {:?}", doc.solid)))?;
    check_alpha(solid, doc.alpha)?;
    if doc.classes.is_empty() {
        return Err(config_err("document has no classes"));
    }
    let record = doc
        .classes
        .get(args.class)
        .ok_or_else(|| config_err(format!("class {} out of range (document has {})", args.class, doc.classes.len())))?;
    let cfg = RunConfig {
        solid,
        alpha: doc.alpha,
        ty: None,
        max_crossings: None,
        closure_tol: args.closure_tol,
        vertex_tol: 1e-9,
        out: None,
        format: Format::Svg,
    }
    .validate()?;
    if record.closure_residual.is_nan() || record.closure_residual > cfg.closure_tol {
        return Err(CliError::Validation(format!(
            "stored closure residual {} exceeds {}",
            record.closure_residual, cfg.closure_tol
        )));
    }
    let spec = cfg.spec()?;
    let seq = CrossingSequence::from_edges(&spec, &record.canonical_sequence)
        .map_err(|e| CliError::Validation(format!("stored sequence is invalid: {e}")))?;
    let path = solve_sequence(&spec, &seq, &cfg.solve_options())
        .ok_or_else(|| CliError::Validation("stored sequence has no simple closed geodesic".into()))?;
    let drift = stored_drift(record, &path);
    if drift.is_nan() || drift > 1e-9 {
        return Err(CliError::Validation(format!("stored crossings differ from a fresh solve by {drift:e}")));
    }
    Ok(Output::Svg(svg::render(&spec, &path)))
}

/// Largest difference between a stored record and a fresh solution.
fn stored_drift(record: &ClassRecord, path: &GeodesicPath) -> f64 {
    if record.crossings.len() != path.crossings.len() {
        return f64::INFINITY;
    }
    record.crossings.iter().zip(&path.crossings).fold((record.total_length - path.total_length).abs(), |acc, (r, c)| {
        if r.edge == c.edge {
            acc.max((r.t - c.t).abs()).max((r.incidence_angle - c.incidence_angle).abs())
        } else {
            f64::INFINITY
        }
    })
}

fn out_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Solve(a) => a.common.out.as_deref(),
        Command::Enumerate(a) => a.out.as_deref(),
        Command::Sweep(a) => a.out.as_deref(),
        Command::Export(a) => a.out.as_deref(),
    }
}

/// Runs a parsed command line and writes its output.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let output = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Export(a) => cmd_export(a),
    }?;
    let text = output.render();
    match out_path(cli) {
        Some(p) => fs::write(p, text).map_err(|e| config_err(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| config_err(e.to_string())),
    }
}
