use std::io::Write;
use std::process::{Command, Output};

use macvertex::partitions::Partition;
use macvertex::polyring::MultiPoly;
use macvertex::symfun::schur;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macvertex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn schur_of_one_one_is_x1x2() {
    let o = run(&["compute", "schur", "--partition", "1,1", "--nvars", "2"]);
    assert!(o.status.success());
    let p: MultiPoly = serde_json::from_str(&stdout(&o)).unwrap();
    let x1x2 = &MultiPoly::var(2, 1, 0) * &MultiPoly::var(2, 1, 1);
    assert_eq!(p, x1x2);
}

#[test]
fn hsasm_count_three() {
    let o = run(&["compute", "hsasm-count", "--n", "3", "--ell", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn partition_fn_at_cube_root_is_schur() {
    let o = run(&["compute", "partition-fn", "--n", "2", "--ell", "1", "--q-order", "3"]);
    assert!(o.status.success());
    let z: MultiPoly = serde_json::from_str(&stdout(&o)).unwrap();
    let s = schur(&Partition::new(vec![1, 1]).unwrap(), 4, 3).unwrap();
    assert_eq!(z, s);
}

#[test]
fn unknown_object_is_usage_error() {
    let o = run(&["compute", "no-such-thing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_schur_point_passes() {
    let o = run(&["verify", "--n", "2", "--ell", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let gamma = v["measured_constants"]["gamma"].as_str().unwrap();
    assert_eq!(gamma, "1");
    assert!(v.get("timings").is_none());
}

#[test]
fn verify_fast_mode_passes() {
    let o = run(&["verify", "--n", "2", "--ell", "1", "--mode", "fast", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_text_format() {
    let o = run(&["verify", "--n", "1", "--ell", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("PASS proportional")));
    assert!(out.trim_end().ends_with("verified"));
}

#[test]
fn same_seed_same_bytes() {
    let args = ["verify", "--n", "2", "--ell", "1", "--mode", "fast", "--seed", "42"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn invalid_and_oversize_inputs_exit_two() {
    assert_eq!(run(&["verify", "--n", "2", "--ell", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "4", "--ell", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "3", "--ell", "3"]).status.code(), Some(2));
    let capped = run(&["verify", "--n", "2", "--ell", "2", "--max-states", "4"]);
    assert_eq!(capped.status.code(), Some(2));
}

fn temp_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn roundtrip_is_byte_identical() {
    let o = run(&["compute", "partition-fn", "--n", "2", "--ell", "2"]);
    let text = stdout(&o);
    let f = temp_with(&text);
    let r = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(stdout(&r), text);
    assert!(r.stderr.is_empty());
}

#[test]
fn roundtrip_of_expansion() {
    let o = run(&["compute", "macdonald", "--partition", "2,1", "--nvars", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let f = temp_with(&text);
    let r = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(stdout(&r), text);
}

#[test]
fn roundtrip_normalises_unsorted_terms() {
    let unsorted = r#"{"nvars":2,"order":1,"terms":[{"exp":[0,1],"coef":["1"]},{"exp":[1,0],"coef":["2"]}]}"#;
    let f = temp_with(unsorted);
    let r = run(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_ne!(stdout(&r).trim(), unsorted);
    assert!(!r.stderr.is_empty());
}

#[test]
fn roundtrip_rejects_truncated_input() {
    let o = run(&["compute", "schur", "--partition", "2,1", "--nvars", "3"]);
    let text = stdout(&o);
    let f = temp_with(&text[..text.len() / 2]);
    assert_eq!(run(&["roundtrip", f.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_main_instance() {
    let o = run(&["verify", "--n", "2", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // For n = 2 both candidate exponents of q coincide.
    let m = v["measured_constants"]["gamma_matches"].as_array().unwrap();
    assert_eq!(m.len(), 2);
}
