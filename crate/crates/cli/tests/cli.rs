mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{corpus, decode_png};
use plotforge_testkit::ps;
use serde_json::Value;

fn plotforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plotforge")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn render_png_at_requested_size() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.png");
    let spec = corpus("golden").join("01_line_linear.json");
    let r = plotforge(&["render", s(&spec), "--out", s(&out), "--width", "321", "--height", "203"]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let raster = decode_png(&std::fs::read(&out).unwrap());
    assert_eq!((raster.width, raster.height), (321, 203));
}

#[test]
fn render_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = corpus("golden").join("12_annotations.json");
    for fmt in ["png", "eps"] {
        let a = dir.path().join(format!("a.{fmt}"));
        let b = dir.path().join(format!("b.{fmt}"));
        for out in [&a, &b] {
            let r = plotforge(&["render", s(&spec), "--out", s(out), "--format", fmt, "--width", "400", "--height", "300"]);
            assert_eq!(r.status.code(), Some(0));
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{fmt}");
    }
}

#[test]
fn render_eps_passes_validator() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.eps");
    let spec = corpus("golden").join("05_log_axes.json");
    let r = plotforge(&["render", s(&spec), "--out", s(&out), "--format", "eps", "--width", "500", "--height", "400"]);
    assert_eq!(r.status.code(), Some(0));
    let page = ps::interpret(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(page.bbox, [0, 0, 500, 400]);
}

#[test]
fn render_of_invalid_spec_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.png");
    let spec = corpus("invalid").join("01_log_nonpositive.json");
    let r = plotforge(&["render", s(&spec), "--out", s(&out)]);
    assert_eq!(r.status.code(), Some(2));
    let err = String::from_utf8_lossy(&r.stderr);
    assert!(err.contains("plots[0].transforms[1].range"), "{err}");
    assert!(err.contains("LOG_NONPOSITIVE"), "{err}");
    assert!(!out.exists());
}

#[test]
fn render_canvas_too_small_is_invalid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.png");
    let spec = corpus("golden").join("01_line_linear.json");
    let r = plotforge(&["render", s(&spec), "--out", s(&out), "--width", "20"]);
    assert_eq!(r.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&r.stderr).contains("CANVAS_TOO_SMALL"));
}

#[test]
fn io_failures_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(plotforge(&["validate", s(&missing)]).status.code(), Some(3));
    let out = dir.path().join("no/such/dir/a.png");
    let spec = corpus("golden").join("01_line_linear.json");
    assert_eq!(plotforge(&["render", s(&spec), "--out", s(&out)]).status.code(), Some(3));
}

#[test]
fn validate_accepts_every_golden_spec() {
    for (name, path, _) in common::golden() {
        let r = plotforge(&["validate", s(&path)]);
        assert_eq!(r.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&r.stdout));
        assert!(r.stdout.is_empty(), "{name}");
    }
}

#[test]
fn validate_names_code_and_path_for_each_invalid_spec() {
    let expect: Value = serde_json::from_str(&std::fs::read_to_string(corpus("invalid").join("expect.json")).unwrap()).unwrap();
    let cases = expect.as_object().unwrap();
    assert_eq!(cases.len(), 10);
    for (file, want) in cases {
        let r = plotforge(&["validate", s(&corpus("invalid").join(file))]);
        assert_eq!(r.status.code(), want["exit"].as_i64().map(|c| c as i32), "{file}");
        let stdout = String::from_utf8(r.stdout).unwrap();
        let first = stdout.lines().next().unwrap_or_else(|| panic!("{file}: no output"));
        let (code, path) = (want["code"].as_str().unwrap(), want["path"].as_str().unwrap());
        assert!(first.contains(&format!(": {code}: ")), "{file}: {first}");
        assert!(first.contains(path), "{file}: {first}");
    }
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(plotforge(&["render"]).status.code(), Some(2));
    assert_eq!(plotforge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(plotforge(&["--help"]).status.code(), Some(0));
}
