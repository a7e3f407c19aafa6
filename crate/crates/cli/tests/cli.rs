use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conncat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_t2_reports_roundtrip_of_size_four() {
    let v = json(&["analyze", "catalog:T2", "--json", "--no-timing"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["input"]["source"], "catalog:T2");
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
    let rt = &v["report"]["roundtrip_semigroup"];
    assert_eq!(rt["status"], "done");
    assert_eq!(rt["value"]["map"].as_array().unwrap().len(), 4);
    assert_eq!(v["report"]["roundtrip_category"]["status"], "done");
    assert!(v["report"].get("timing_ms").is_none());
}

#[test]
fn analyze_l2_skips_roundtrip() {
    let o = run(&["analyze", "catalog:L2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["semigroup"]["flags"]["left_reductive"], false);
    assert_eq!(v["report"]["roundtrip_semigroup"]["status"], "skipped");
    assert!(v["report"]["roundtrip_semigroup"]["reason"].as_str().unwrap().contains("not left reductive"));
}

#[test]
fn self_supported_check_on_i2() {
    let o = run(&["analyze", "catalog:I2", "--check", "self-supported"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check self-supported: pass"));
    let o = run(&["analyze", "catalog:T2", "--check", "self-supported"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["analyze", "catalog:T2", "--check", "bogus"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_without_timing() {
    let a = run(&["analyze", "catalog:TS3", "--json", "--no-timing"]);
    let b = run(&["analyze", "catalog:TS3", "--json", "--no-timing", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn eggbox_text_and_dot() {
    let t = stdout(&run(&["eggbox", "catalog:T2"]));
    assert!(t.contains("D0 (1x2)") && t.contains("D1 (1x1)"));
    assert!(t.contains("[1 2] [2 1]*"));
    let z = stdout(&run(&["eggbox", "catalog:Z2"]));
    assert_eq!(z.matches('*').count(), 1);
    let dot = stdout(&run(&["eggbox", "catalog:L2Z", "--format", "dot"]));
    assert!(dot.starts_with("digraph eggbox"));
    assert_eq!(dot.matches("subgraph cluster_d").count(), 2);
    let l2z = stdout(&run(&["eggbox", "catalog:L2Z"]));
    assert!(l2z.contains("D0 (2x1)"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2\n0 1\n1\n");
    let o = run(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["analyze", "catalog:Nope"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/definitely/missing"]).status.code(), Some(2));
}

#[test]
fn caps_exit_three() {
    assert_eq!(run(&["analyze", "catalog:T3", "--cap-size", "10"]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "catalog:T3", "--cap-cones", "5"]).status.code(), Some(3));
}

#[test]
fn verify_suite_passes_on_the_catalog() {
    let o = run(&["verify-suite"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_suite_names_a_mutated_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = stdout(&run(&["catalog", "build", "Z2"]));
    let mutated = write(dir.path(), "z2.txt", &z2.replace("1 0\n", "1 1\n"));
    let o = run(&["verify-suite", "--fixture", &format!("Z2={mutated}"), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failures = v["failures"].as_array().unwrap();
    assert!(failures.iter().any(|f| f["subject"] == "Z2" && f["name"] == "expectation"));

    let broken = write(dir.path(), "broken.txt", "2\n0 1\n0 0\n");
    let o = run(&["verify-suite", "semigroup-core", "--fixture", &format!("X={broken}")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("semigroup-core/associative X"));
}

#[test]
fn verify_suite_scopes() {
    let v = json(&["verify-suite", "functors", "--json"]);
    assert_eq!(v["scope"], "functors");
    assert!(v["checks"].as_u64().unwrap() > 0);
    assert_eq!(run(&["verify-suite", "nope"]).status.code(), Some(2));
}

#[test]
fn catalog_list_build_verify() {
    let list = stdout(&run(&["catalog", "list"]));
    assert!(list.lines().any(|l| l.starts_with("L2Z")));
    let p2 = stdout(&run(&["catalog", "build", "P2"]));
    assert!(p2.starts_with("objects 3"));
    assert_eq!(run(&["catalog", "verify", "T2", "P2"]).status.code(), Some(0));
}

#[test]
fn convert_roundtrips_through_generators() {
    let dir = tempfile::tempdir().unwrap();
    let gens = stdout(&run(&["convert", "catalog:I2", "--to", "generators"]));
    assert!(gens.lines().any(|l| l.starts_with("t 8:")));
    let path = write(dir.path(), "i2.gens", &gens);
    let table = stdout(&run(&["convert", &path]));
    assert!(table.lines().any(|l| l == "7"));
    let v = json(&["analyze", &path, "--json", "--no-timing"]);
    assert_eq!(v["report"]["semigroup"]["flags"]["inverse"], true);
}

#[test]
fn analysis_script_with_homomorphism_and_downset() {
    let dir = tempfile::tempdir().unwrap();
    let script = write(
        dir.path(),
        "hom.txt",
        "analysis\nsource: catalog:RRB4\ntarget: catalog:Y2\nhom: 0->0\nhom: 1->1\nhom: 2->0\nhom: 3->1\n",
    );
    let o = run(&["analyze", &script, "--check", "natural"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    write(dir.path(), "p2.txt", &stdout(&run(&["catalog", "build", "P2"])));
    let script = write(dir.path(), "down.txt", "analysis\nsource: p2.txt\ndownset: 0 1\n");
    let v = json(&["analyze", &script, "--json"]);
    assert_eq!(v["report"]["connection"]["status"], "done");
    assert_eq!(v["report"]["roundtrip_category"]["status"], "done");
}
