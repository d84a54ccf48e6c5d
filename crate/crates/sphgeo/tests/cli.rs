use std::path::Path;
use std::process::{Command, Output};

use sphgeo::ResultDocument;

fn sphgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphgeo")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn document(out: &Output) -> ResultDocument {
    assert_eq!(code(out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    ResultDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn solve_exit_codes() {
    let doc = document(&sphgeo(&["solve", "--solid", "tetra", "--alpha", "0.6pi", "--type", "0,1"]));
    assert_eq!(doc.classes.len(), 1);
    assert_eq!(doc.classes[0].kind_tag, "type (0, 1)");
    assert_eq!(doc.bounds.as_ref().unwrap().n, 1);
    assert_eq!(code(&sphgeo(&["solve", "--solid", "tetra", "--alpha", "0.6pi", "--type", "1,2"])), 3);
    assert_eq!(code(&sphgeo(&["solve", "--solid", "octa", "--alpha", "0.55pi", "--sequence", "0,3,1"])), 2);
    assert_eq!(code(&sphgeo(&["solve", "--solid", "tetra", "--alpha", "0.6pi"])), 2);
    assert_eq!(code(&sphgeo(&["solve", "--solid", "tetra", "--alpha", "0.6pi", "--type", "2,4"])), 2);
    assert_eq!(code(&sphgeo(&["enumerate", "--solid", "cube", "--alpha", "0.6pi", "--tol-closure", "-1"])), 2);
}

#[test]
fn solve_by_sequence_matches_enumeration() {
    let all = document(&sphgeo(&["enumerate", "--solid", "octa", "--alpha", "0.4pi"]));
    for class in &all.classes {
        let ids: Vec<String> = class.canonical_sequence.iter().map(ToString::to_string).collect();
        let one = document(&sphgeo(&["solve", "--solid", "octa", "--alpha", "0.4pi", "--sequence", &ids.join(",")]));
        assert_eq!(one.classes[0], *class);
    }
    // Two crossings of one edge in a row never close up.
    assert_eq!(code(&sphgeo(&["solve", "--solid", "octa", "--alpha", "0.4pi", "--sequence", "0,0,3"])), 2);
}

#[test]
fn enumerate_counts() {
    let octa = document(&sphgeo(&["enumerate", "--solid", "octa", "--alpha", "0.4pi"]));
    assert_eq!(octa.classes.len(), 2);
    assert!(octa.bounds.is_none());
    let cube = document(&sphgeo(&["enumerate", "--solid", "cube", "--alpha", "0.6pi", "--depth", "12"]));
    let mut orbits: Vec<usize> = cube.classes.iter().map(|c| c.orbit_size).collect();
    orbits.sort_unstable();
    assert_eq!(orbits, [3, 4, 12]);
    let tetra = document(&sphgeo(&["enumerate", "--solid", "tetra", "--alpha", "0.35pi", "--depth", "24"]));
    assert!(tetra.classes.len() >= 2);
    for tag in ["type (0, 1)", "type (1, 1)"] {
        assert!(tetra.classes.iter().any(|c| c.kind_tag == tag));
    }
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["enumerate", "--solid", "octa", "--alpha", "0.4pi", "--depth", "12", "--format", "json"];
    let (a, b) = (sphgeo(&args), sphgeo(&args));
    assert_eq!(a.stdout, b.stdout);
    let doc = document(&a);
    let again = ResultDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(again, doc);
    assert_eq!(again.to_json().as_bytes(), a.stdout.as_slice());
}

#[test]
fn sweep_rows() {
    let out = sphgeo(&["sweep", "--solid", "tetra", "--from", "0.55pi", "--to", "0.65pi", "--step", "0.01pi"]);
    assert_eq!(code(&out), 0);
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(str::to_owned).collect();
    assert_eq!(&header[..6], ["alpha_radians", "N", "c1", "c2", "types_found", "types_excluded"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 11);
    for r in &rows {
        assert_eq!(&r[1], "1");
        assert_eq!(&r[4], "0:1");
        assert_eq!(&r[7], "true");
    }
    assert_eq!(code(&sphgeo(&["sweep", "--from", "0.6pi", "--to", "0.55pi", "--step", "0.01pi"])), 2);
    assert_eq!(code(&sphgeo(&["sweep", "--from", "0.3pi", "--to", "0.4pi", "--step", "0.01pi"])), 2);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn export_svg() {
    let dir = tempfile::tempdir().unwrap();
    let doc = document(&sphgeo(&["enumerate", "--solid", "octa", "--alpha", "0.4pi"]));
    let input = write(dir.path(), "octa.json", &doc.to_json());
    let type1 = doc.classes.iter().position(|c| c.kind_tag == "type 1").unwrap().to_string();
    let out = sphgeo(&["export", "--in", &input, "--class", &type1]);
    assert_eq!(code(&out), 0);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches(r#"class="face""#).count(), 6);
    assert_eq!(svg.matches(r#"<g id="geodesic""#).count(), 1);
    assert_eq!(svg.matches(r#"class="geodesic""#).count(), 1);

    let mut tampered = doc.clone();
    tampered.classes[0].closure_residual = 1e-3;
    let bad = write(dir.path(), "tampered.json", &tampered.to_json());
    assert_eq!(code(&sphgeo(&["export", "--in", &bad])), 4);

    let mut moved = doc.clone();
    moved.classes[0].crossings[0].t += 1e-4;
    let bad = write(dir.path(), "moved.json", &moved.to_json());
    assert_eq!(code(&sphgeo(&["export", "--in", &bad])), 4);

    let mut empty = doc;
    empty.classes.clear();
    let bad = write(dir.path(), "empty.json", &empty.to_json());
    assert_eq!(code(&sphgeo(&["export", "--in", &bad])), 2);
    assert_eq!(code(&sphgeo(&["export", "--in", "/nonexistent/doc.json"])), 2);
}
