use std::path::Path;
use std::process::{Command, Output};

fn scalext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scalext")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn list_names_every_instance() {
    let o = scalext(&["list"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    for name in ["c2", "h4", "s3", "s3-dual", "trivial-c2", "trivial-h4", "trivial-s3", "coaction-twisted", "tau-identity"] {
        assert!(out.contains(name), "{name}");
    }
}

#[test]
fn passing_suite_exits_zero() {
    let o = scalext(&["verify", "--instance", "h4", "--suite", "yd"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("yd.left.yd_condition"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn failing_suite_exits_one() {
    let o = scalext(&["verify", "--instance", "s3", "--suite", "yd", "--perturbation", "coaction-twisted"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8(o.stdout).unwrap().contains("FAIL"));
}

#[test]
fn structural_problems_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&scalext(&["verify", "--instance", "no-such-file.json", "--suite", "yd"])), 2);
    assert_eq!(code(&scalext(&["verify", "--instance", "c2", "--suite", "yd", "--perturbation", "nonsense"])), 2);
    let bad = dir.path().join("bad.json");
    let text = {
        let p = dir.path().join("c2.json");
        assert_eq!(code(&scalext(&["export", "--instance", "c2", "--out", path(&p)])), 0);
        std::fs::read_to_string(&p).unwrap()
    };
    std::fs::write(&bad, text.replacen("\"-1/1\"", "\"1/0\"", 1).replacen("\"1/1\"", "\"1/0\"", 1)).unwrap();
    let o = scalext(&["verify", "--instance", path(&bad), "--suite", "hopf"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("parse error at"));
    assert_eq!(code(&scalext(&["export", "--instance", "nonsense", "--out", path(&bad)])), 2);
}

#[test]
fn exported_file_verifies_like_the_catalog_entry() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("h4.json");
    assert_eq!(code(&scalext(&["export", "--instance", "h4", "--out", path(&f)])), 0);
    let (ra, rb) = (dir.path().join("a.json"), dir.path().join("b.json"));
    assert_eq!(code(&scalext(&["verify", "--instance", path(&f), "--suite", "all", "--report", path(&ra)])), 0);
    assert_eq!(code(&scalext(&["verify", "--instance", "h4", "--suite", "all", "--report", path(&rb)])), 0);
    assert_eq!(std::fs::read(&ra).unwrap(), std::fs::read(&rb).unwrap());
    assert_eq!(code(&scalext(&["verify", "--instance", path(&f), "--suite", "hopf", "--perturbation", "antipode-sign"])), 1);
}

#[test]
fn reports_are_byte_identical_and_capped() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let args = |p: &Path| vec!["verify", "--instance", "s3", "--suite", "bialgebroid", "--perturbation", "coaction-twisted", "--witness-cap", "3", "--report"]
        .into_iter()
        .map(String::from)
        .chain([path(p).to_string()])
        .collect::<Vec<_>>();
    for p in [&a, &b] {
        let o = Command::new(env!("CARGO_BIN_EXE_scalext")).args(args(p)).output().unwrap();
        assert_eq!(code(&o), 1);
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["instance"], "s3+coaction-twisted");
    assert!(v.get("timings").is_none());
    let checks = v["checks"].as_array().unwrap();
    let tk = checks.iter().find(|c| c["name"] == "bialgebroid.left.takeuchi.factorizes").unwrap();
    assert_eq!(tk["witnesses"].as_array().unwrap().len(), 3);
    assert!(tk["failures"].as_u64().unwrap() > 3);
}

#[test]
fn timings_are_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    assert_eq!(code(&scalext(&["verify", "--instance", "c2", "--suite", "lu", "--timings", "--report", path(&r)])), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(v["timings"][0]["stage"], "lu");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(code(&scalext(&["verify", "--instance", "c2", "--suite", "everything"])), 2);
}
