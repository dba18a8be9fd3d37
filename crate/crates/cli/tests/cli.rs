use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_segrelab"));
    c.env_remove("SEGRELAB_MAX_POINTS");
    c
}

fn spec(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn build(dir: &TempDir, spec_path: &Path) -> (Output, PathBuf) {
    let out = dir.path().join("out.json");
    let o = bin().arg("build").arg("-s").arg(spec_path).arg("-o").arg(&out).output().unwrap();
    (o, out)
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn build_fano_plane() {
    let dir = TempDir::new().unwrap();
    let (o, out) = build(&dir, &spec("fano.json"));
    assert!(o.status.success(), "{}", stderr(&o));
    let j = read(&out);
    assert_eq!(j["points"], 7);
    assert_eq!(j["lines"].as_array().unwrap().len(), 7);
    assert!(j["parallel_classes"].is_null());
    assert_eq!(j["labels"].as_object().unwrap().len(), 7);
}

#[test]
fn build_grid_has_sorted_lines() {
    let dir = TempDir::new().unwrap();
    let (o, out) = build(&dir, &spec("grid.json"));
    assert!(o.status.success());
    let j = read(&out);
    assert_eq!(j["points"], 9);
    let lines: Vec<Vec<u64>> = serde_json::from_value(j["lines"].clone()).unwrap();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn build_complement_carries_parallel_classes() {
    let dir = TempDir::new().unwrap();
    let (o, out) = build(&dir, &spec("grid_perp_complement.json"));
    assert!(o.status.success(), "{}", stderr(&o));
    let j = read(&out);
    assert_eq!(j["points"], 12);
    assert!(j["parallel_classes"].is_array());
}

#[test]
fn build_invalid_dimension_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind":"grassmann","n":4,"k":7,"p":2}"#).unwrap();
    let (o, _) = build(&dir, &bad);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("InvalidDimension"));
}

#[test]
fn build_parse_error_reports_position() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"projective\",\n  \"n\": 3,\n  \"p\": \n}").unwrap();
    let (o, _) = build(&dir, &bad);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
}

#[test]
fn check_fano_and_grid() {
    let dir = TempDir::new().unwrap();
    let (_, out) = build(&dir, &spec("fano.json"));
    let o = bin().args(["check", "-p", "veblenian,gamma"]).arg("-i").arg(&out).output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("veblenian: true"));
    assert!(stdout(&o).contains("gamma: true"));

    let (_, out) = build(&dir, &spec("grid.json"));
    let o = bin().args(["check", "-p", "linear"]).arg("-i").arg(&out).output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("linear: false"));

    let o = bin().args(["check", "-p", "linear=true"]).arg("-i").arg(&out).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn check_affine_axioms_on_a_product() {
    let dir = TempDir::new().unwrap();
    let (o, out) = build(&dir, &spec("affine_square.json"));
    assert!(o.status.success(), "{}", stderr(&o));
    let o = bin()
        .args(["check", "-p", "partial_affine=true,affine_pls=true,tamaschke=true,parallelogram=true"])
        .arg("-i")
        .arg(&out)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn check_missing_file_exits_2() {
    let o = bin().args(["check", "-i", "/nonexistent/structure.json", "-p", "linear"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_unknown_property_exits_2() {
    let dir = TempDir::new().unwrap();
    let (_, out) = build(&dir, &spec("fano.json"));
    let o = bin().args(["check", "-p", "shiny"]).arg("-i").arg(&out).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_suite_passes() {
    let o = bin().args(["verify", "--suites", "flappy-hyperplanes-are-spiky"]).output().unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS 1/1"));
}

#[test]
fn verify_gkz_at_p2() {
    let o = bin().args(["verify", "--suites", "gkz-iff-spiky", "--p", "2"]).output().unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_covering_at_p2_is_outside_hypothesis() {
    let o = bin().args(["verify", "--suites", "covering-by-affine-spaces", "--p", "2"]).output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("SKIPPED-HYPOTHESIS"));
    assert!(stdout(&o).contains("PASS 0/1"));
}

#[test]
fn verify_unknown_suite_lists_registry() {
    let o = bin().args(["verify", "--suites", "no-such-suite"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("slice-criterion") && e.contains("gkz-iff-spiky"));
}

#[test]
fn verify_failure_exits_1() {
    let o = bin().args(["verify", "--suites", "spiky-non-flappy-example"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("PASS 0/1"));
}

fn strip_times(mut v: Value) -> Value {
    let obj = v.as_object_mut().unwrap();
    obj.remove("started_at");
    obj.remove("total_runtime_ms");
    for r in obj.get_mut("records").unwrap().as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("wall_time_ms");
    }
    v
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let suites = "form-locus-hyperplane-or-all,nondegenerate-hyperplane-exists,slice-criterion,hyperplane-as-correlation";
    let mut reports = Vec::new();
    for (i, workers) in ["1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let o = bin().args(["verify", "--suites", suites, "--seed", "7", "--workers", workers]).arg("--report").arg(&path).output().unwrap();
        assert!(o.status.success(), "{}", stdout(&o));
        reports.push(read(&path));
    }
    let mut a = strip_times(reports[0].clone());
    let mut b = strip_times(reports[1].clone());
    a["config"].as_object_mut().unwrap().remove("workers");
    b["config"].as_object_mut().unwrap().remove("workers");
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let ids: Vec<&str> = a["records"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn max_points_flag_beats_environment() {
    let suite = ["verify", "--suites", "polar-product-form-hyperplane"];
    let o = bin().args(suite).env("SEGRELAB_MAX_POINTS", "100").output().unwrap();
    assert!(stdout(&o).contains("SKIPPED "), "{}", stdout(&o));
    let o = bin().args(suite).args(["--max-points", "5000"]).env("SEGRELAB_MAX_POINTS", "100").output().unwrap();
    assert!(stdout(&o).contains("PASS 1/1"), "{}", stdout(&o));
    let o = bin().args(suite).env("SEGRELAB_MAX_POINTS", "many").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_prints_every_suite() {
    let o = bin().args(["verify", "--list"]).output().unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), segrelab_cli::suites::registry().len());
}
