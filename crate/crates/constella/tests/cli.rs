use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use constella::io::{parse_morphism, parse_structure, serialize};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn constella(args: &[&str]) -> Output {
    constella_with_cap(args, None)
}

fn constella_with_cap(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_constella"));
    cmd.args(args).env_remove("CONSTELLA_CAP");
    if let Some(cap) = cap {
        cmd.env("CONSTELLA_CAP", cap);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fixture_files_are_canonical_and_valid() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        let doc = parse_structure(&text).unwrap();
        assert_eq!(serialize(&doc), text, "{}", p.display());
        assert!(doc.validate().is_valid(), "{}", p.display());
        seen += 1;
    }
    assert_eq!(seen, 20);
}

#[test]
fn verify_left_unital() {
    let o = constella(&["verify", path(&fixture("left_unital.sgpd"))]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["valid"], true);
    assert_eq!(r["counts"]["defined_pairs"], 11);
    assert_eq!(r["classification"]["unitary"], false);
}

#[test]
fn report_keys_are_ordered_and_stable() {
    let f = fixture("single_arrow.sgpd");
    let args = ["verify", path(&f)];
    let first = stdout(&constella(&args));
    assert_eq!(first, stdout(&constella(&args)));
    let keys: Vec<usize> = ["\"valid\"", "\"violations\"", "\"classification\"", "\"counts\""]
        .iter()
        .map(|k| first.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn classify_single_arrow() {
    let o = constella(&["classify", path(&fixture("single_arrow.sgpd"))]);
    assert_eq!(code(&o), 0);
    let c = &json(&o)["classification"];
    assert_eq!(c["unitary"], true);
    assert_eq!(c["nd"], false);
    assert_eq!(c["lc"], true);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.sgpd");
    std::fs::write(&f, "kind semigroupoid\nelements a b\nplus a a\nplus b b\ncomp a a a\ncomp b b b\ncomp a b a\ncomp b a b\n").unwrap();
    let o = constella(&["verify", path(&f)]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert_eq!(r["valid"], false);
    let first = &r["violations"][0];
    assert!(first["axiom"].is_string());
    assert!(first["witness"].as_array().unwrap().iter().all(|w| w == "a" || w == "b"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.sgpd");
    std::fs::write(&f, "kind semigroupoid\nelements a\nplus a a\ncomp a a z\n").unwrap();
    let o = constella(&["convert", "--to", "constellation", path(&f)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4: unknown element `z`"));
    assert_eq!(code(&constella(&["verify", "/nonexistent/file"])), 2);
    assert_eq!(code(&constella(&["frobnicate"])), 2);
    assert_eq!(code(&constella(&["convert", "--to", "monoid", path(&f)])), 2);
}

#[test]
fn convert_matches_the_fixture_pairs() {
    for name in ["semilattice_zero", "left_unital", "left_unital_tail", "z2"] {
        let sgpd = std::fs::read_to_string(fixture(&format!("{name}.sgpd"))).unwrap();
        let cnst = std::fs::read_to_string(fixture(&format!("{name}.cnst"))).unwrap();
        let o = constella(&["convert", "--to", "constellation", path(&fixture(&format!("{name}.sgpd")))]);
        assert_eq!((code(&o), stdout(&o)), (0, cnst.clone()), "{name}");
        let o = constella(&["convert", "--to", "semigroupoid", path(&fixture(&format!("{name}.cnst")))]);
        assert_eq!((code(&o), stdout(&o)), (0, sgpd), "{name}");
        let o = constella(&["convert", "--to", "constellation", path(&fixture(&format!("{name}.cnst")))]);
        assert_eq!(stdout(&o), cnst, "{name}");
    }
}

#[test]
fn roundtrip_verb() {
    for f in ["semilattice_zero_tail.sgpd", "semilattice_zero_tail.cnst", "singleton.sgpd"] {
        let o = constella(&["roundtrip", path(&fixture(f))]);
        assert_eq!((code(&o), stdout(&o).as_str()), (0, "roundtrip ok\n"), "{f}");
    }
}

#[test]
fn expand_with_iota() {
    let f = fixture("single_arrow.sgpd");
    let o = constella(&["expand", "--iota", path(&f)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let (sz, iota) = out.split_once("---\n").unwrap();
    let doc = parse_structure(sz).unwrap();
    assert_eq!(doc.table.len(), 3);
    assert!(doc.validate().is_valid());
    let m = parse_morphism(iota).unwrap();
    let source = parse_structure(&std::fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(m.resolve(&source.table, &doc.table).unwrap().len(), 2);
    assert!(iota.contains("map x x_x+__x\n"));
    let plain = constella(&["expand", path(&fixture("single_arrow.cnst"))]);
    assert!(parse_structure(&stdout(&plain)).unwrap().validate().is_valid());
}

fn write_morphism(dir: &Path, source: &str, target: &str, map: &[(&str, &str)]) -> PathBuf {
    for f in [source, target] {
        std::fs::copy(fixture(f), dir.join(f)).unwrap();
    }
    let mut text = format!("source {source}\ntarget {target}\n");
    for (a, b) in map {
        text.push_str(&format!("map {a} {b}\n"));
    }
    let p = dir.join("phi.mor");
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_morphism_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let star = write_morphism(dir.path(), "semilattice_top.sgpd", "semilattice.sgpd", &[("e", "e"), ("f", "f")]);
    for kind in ["rm", "pm", "ir", "ip"] {
        let o = constella(&["check-morphism", "--kind", kind, path(&star)]);
        let expected = if kind == "rm" || kind == "ir" { 1 } else { 0 };
        assert_eq!(code(&o), expected, "{kind}");
    }
    let o = constella(&["check-morphism", "--kind", "rm", path(&star)]);
    assert_eq!(json(&o)["violations"][0]["axiom"], "rm2");
    let id = write_morphism(dir.path(), "left_unital.sgpd", "left_unital.sgpd", &[("e", "e"), ("x", "x"), ("x+", "x+"), ("y", "y"), ("y+", "y+")]);
    assert_eq!(code(&constella(&["check-morphism", "--kind", "ip", path(&id)])), 0);
    let short = write_morphism(dir.path(), "left_unital.sgpd", "left_unital.sgpd", &[("e", "e")]);
    assert_eq!(code(&constella(&["check-morphism", "--kind", "rm", path(&short)])), 2);
}

#[test]
fn extend_identity() {
    let dir = tempfile::tempdir().unwrap();
    let phi = write_morphism(dir.path(), "single_arrow.cnst", "single_arrow.cnst", &[("x", "x"), ("x+", "x+")]);
    let o = constella(&["extend", "--phi", path(&phi)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let (_, m) = out.split_once("---\n").unwrap();
    assert_eq!(m, "source -\ntarget single_arrow.cnst\nmap x+__x+ x+\nmap x_x+__x x\nmap x_x+__x+ x+\n");
    let bad = write_morphism(dir.path(), "single_arrow.cnst", "single_arrow.cnst", &[("x", "x+"), ("x+", "x")]);
    assert_eq!(code(&constella(&["extend", "--phi", path(&bad)])), 1);
}

#[test]
fn enumerate_counts() {
    let count = |kind: &str, size: &str, iso: bool| {
        let mut args = vec!["enumerate", "--kind", kind, "--size", size, "--count-only"];
        if iso {
            args.push("--up-to-iso");
        }
        let o = constella(&args);
        assert_eq!(code(&o), 0);
        json(&o)["counts"][kind].as_u64().unwrap()
    };
    assert_eq!(count("lrs", "2", false), 9);
    assert_eq!(count("lic", "2", false), 9);
    assert_eq!(count("lrs", "3", true), 25);
    assert_eq!(count("lic", "3", false), 130);
}

#[test]
fn enumerate_records_parse() {
    let o = constella(&["enumerate", "--kind", "lic", "--size", "2"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    for l in lines {
        let doc = parse_structure(l).unwrap();
        assert!(doc.order.is_some());
        assert!(doc.validate().is_valid());
    }
}

#[test]
fn cap_from_environment() {
    let args = ["enumerate", "--kind", "lrs", "--size", "3", "--count-only"];
    assert_eq!(code(&constella_with_cap(&args, Some("1000,2"))), 2);
    assert_eq!(code(&constella_with_cap(&args, Some("1000,3"))), 0);
    assert_eq!(code(&constella_with_cap(&args, Some("lots"))), 2);
    assert_eq!(code(&constella(&["enumerate", "--kind", "lrs", "--size", "5", "--count-only"])), 2);
}

#[test]
fn theorems_verb() {
    let o = constella(&["theorems", "--size", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().all(|l| l.contains(" PASS ")));
}

#[test]
fn verify_golden_report() {
    let o = constella(&["verify", path(&fixture("single_arrow.sgpd"))]);
    let golden = include_str!("golden/verify_single_arrow.json");
    assert_eq!(stdout(&o), golden);
}
