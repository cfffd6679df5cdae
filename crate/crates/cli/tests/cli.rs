use std::path::PathBuf;
use std::process::{Command, Output};

fn quiver(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../quivers").join(name)
}

fn perihall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perihall")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gnum_counts_lines_in_the_plane() {
    let a1 = quiver("a1.json");
    let o = perihall(&["--quiver", a1.to_str().unwrap(), "--dims", "2", "gnum", "2", "1", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3");
    let o = perihall(&["--quiver", a1.to_str().unwrap(), "--q", "5", "--dims", "2", "gnum", "2", "1", "1"]);
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn enumerate_zero_bound_gives_the_zero_class() {
    let o = perihall(&["enumerate", "--kind", "reps", "--dims", "0,0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!(["0,0:"]));
}

#[test]
fn enumerate_complexes_lists_keys() {
    let o = perihall(&["enumerate", "--kind", "complexes", "--dims", "1,1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys = v.as_array().unwrap();
    assert!(keys.iter().all(|k| k.get("A").is_some() && k.get("P").is_some()));
    assert!(keys.len() > 1);
}

#[test]
fn mul_and_coproduct_emit_json() {
    let o = perihall(&["mul", "E:S1", "K:1,0"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);

    let o = perihall(&["coproduct", "E:S2", "--chi", "euler"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|t| t.get("left").is_some() && t.get("coeff").is_some()));
}

#[test]
fn verify_writes_a_reproducible_report() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = quiver("a2.json");
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = perihall(&[
            "verify",
            "--quiver",
            a2.to_str().unwrap(),
            "--dims",
            "1,1",
            "--checks",
            "assoc-hall,coassoc-E0,serre-sanity",
            "--deterministic",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        std::fs::read_to_string(path).unwrap()
    };
    let first = run("a.json");
    assert_eq!(first, run("b.json"));
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["status"], "pass");
        assert!(r["anchor"].as_str().is_some_and(|a| !a.is_empty()));
    }
}

#[test]
fn failing_check_exits_one_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = perihall(&["verify", "--dims", "1,1", "--checks", "lemma-ggt", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["counterexample"].is_object());
}

#[test]
fn budget_exhaustion_is_distinguishable() {
    let o = perihall(&["verify", "--dims", "2,2", "--checks", "thm-bialgebra"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("skipped-budget"));
}

#[test]
fn bad_config_is_rejected() {
    assert_eq!(perihall(&["--q", "4", "info"]).status.code(), Some(2));
    assert_eq!(perihall(&["--dims", "1", "info"]).status.code(), Some(2));
    assert_eq!(perihall(&["verify", "--checks", "nonsense"]).status.code(), Some(2));
    assert_eq!(perihall(&["mul", "X:1", "1"]).status.code(), Some(2));
}

#[test]
fn info_reports_defaults() {
    let o = perihall(&["info"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], 2);
    assert_eq!(v["dims"], serde_json::json!([2, 2]));
    assert_eq!(v["budget"], 1 << 20);
    assert_eq!(v["checks"].as_array().unwrap().len(), 18);
}
