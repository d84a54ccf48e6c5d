//! SVG figures of a development.
//!
//! The developed faces are drawn in the azimuthal equidistant projection
//! about the geodesic's pole: a point at angular distance `rho` and azimuth
//! `phi` from the pole lands at radius `rho` in direction `phi`. The
//! geodesic lies on the pole's equator and so renders as an arc of the
//! circle of radius `pi/2`.

use std::f64::consts::PI;
use std::fmt::Write;

use sphgeo_core::sphtrig::{pole_edge_crossing, rot_about};
use sphgeo_core::{develop, GeodesicPath, GreatArc, SolidSpec, SpherePoint};

/// Pixels per radian.
const SCALE: f64 = 100.0;
const EDGE_SAMPLES: usize = 24;
const GEODESIC_SAMPLES: usize = 256;

fn project(pole: SpherePoint, p: SpherePoint) -> (f64, f64) {
    let rho = pole.distance(p);
    let phi = pole.azimuth_of(p.vec());
    (SCALE * rho * phi.cos(), -SCALE * rho * phi.sin())
}

fn polyline(out: &mut String, class: &str, pts: impl Iterator<Item = (f64, f64)>, closed: bool) {
    let coords: Vec<String> = pts.map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
    let tag = if closed { "polygon" } else { "polyline" };
    let _ = writeln!(out, r#"    <{tag} class="{class}" points="{}"/>"#, coords.join(" "));
}

/// Face outlines of the development of `path` and the geodesic through them.
///
/// # Panics
///
/// If `path.seq` is not a valid sequence of `spec`.
#[must_use]
pub fn render(spec: &SolidSpec, path: &GeodesicPath) -> String {
    let dev = develop(spec, &path.seq).expect("solved paths carry valid sequences");
    let pole = path.pole;
    let half = SCALE * PI + 10.0;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.3} {:.3} {:.3} {:.3}">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    );
    let _ = writeln!(
        out,
        "  <title>{} at alpha = {} rad, {} crossings</title>",
        spec.kind(),
        spec.alpha().radians(),
        path.seq.len()
    );
    out.push_str("  <g id=\"faces\" fill=\"none\" stroke=\"#555\" stroke-width=\"1\">\n");
    for (k, c) in path.seq.crossings().iter().enumerate() {
        let placement = &dev.placements[k];
        let chart = spec.face_chart(c.from_face);
        let n = chart.len();
        let pts = (0..n).flat_map(|i| {
            let arc = GreatArc::new(placement.apply_point(chart[i]), placement.apply_point(chart[(i + 1) % n]))
                .expect("chart edges are proper arcs");
            (0..EDGE_SAMPLES).map(move |j| project(pole, arc.point_at(j as f64 / EDGE_SAMPLES as f64)))
        });
        polyline(&mut out, "face", pts, true);
    }
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"geodesic\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\">\n");
    let start = pole_edge_crossing(pole, &dev.arcs[0]).map_or_else(|| dev.arcs[0].point_at(0.5), |x| x.point);
    let pts = (0..=GEODESIC_SAMPLES).map(|j| {
        let theta = path.total_length * j as f64 / GEODESIC_SAMPLES as f64;
        let r = rot_about(pole.vec(), theta).expect("pole is a unit vector");
        project(pole, r.apply_point(start))
    });
    polyline(&mut out, "geodesic", pts, false);
    out.push_str("  </g>\n</svg>\n");
    out
}
