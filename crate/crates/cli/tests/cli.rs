use std::path::PathBuf;
use std::process::{Command, Output};

fn charval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charval"))
        .args(args)
        .env_remove("CHARVAL_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = charval(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn named_groups() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog/named_groups.grp")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("charval-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn s3_table() {
    let t = json(&["table", "family:sym(3)", "--format", "json"]);
    assert_eq!(t["order"], 6);
    assert_eq!(t["degrees"], serde_json::json!([1, 1, 2]));
    let rows: Vec<Vec<i64>> = serde_json::from_value(t["characters"].clone()).unwrap();
    assert_eq!(rows, vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]);

    let text = stdout(&charval(&["table", "family:sym(3)"]));
    assert!(text.contains("X.3      2      0       -1"), "{text}");
}

#[test]
fn trivial_table() {
    let t = json(&["table", "family:cyclic(1)", "--format", "json"]);
    assert_eq!(t["characters"], serde_json::json!([[1]]));
}

#[test]
fn irrational_values_with_approximation() {
    let text = stdout(&charval(&["table", "family:gendihedral(9)"]));
    assert!(text.contains("ζ9 + ζ9^8"), "{text}");
    assert!(text.contains("1.5321"), "{text}");
    let t = json(&["table", "family:gendihedral(9)", "--format", "json"]);
    assert_eq!(t["classes"].as_array().unwrap().len(), 6);
}

#[test]
fn cv_sizes() {
    for (spec, n) in [
        ("family:sym(4)", 5),
        ("family:cyclic(5)", 5),
        ("family:sym(3)", 4),
        ("family:gendihedral(3^2)", 4),
        ("family:product(cyclic(2),gendihedral(3))", 5),
    ] {
        assert_eq!(json(&["cv", spec, "--format", "json"])["cv_size"], n, "{spec}");
    }
    let text = stdout(&charval(&["cv", "family:sym(4)"]));
    assert!(text.contains("cv       {-1, 0, 1, 2, 3}"), "{text}");
}

#[test]
fn catalog_record_spec() {
    let spec = format!("file:{}#q8", named_groups().display());
    let v = json(&["cv", &spec, "--format", "json"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["cv_size"], 5);
}

#[test]
fn exit_codes() {
    assert_eq!(charval(&["table", "family:foo(3)"]).status.code(), Some(2));
    assert_eq!(charval(&["table", "nonsense"]).status.code(), Some(2));
    assert_eq!(charval(&["scan", "data", "--predicates", "bogus"]).status.code(), Some(2));
    assert_eq!(charval(&["table", "family:sym(5)", "--cap", "50"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_charval"))
        .args(["cv", "family:sym(4)"])
        .env("CHARVAL_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(charval(&["verify", "table:/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn verify_stored_tables() {
    let good = tmp("s3.json");
    let o = charval(&["table", "family:sym(3)", "--format", "json"]);
    std::fs::write(&good, &o.stdout).unwrap();
    let scope = format!("table:{}", good.display());
    assert_eq!(charval(&["verify", &scope]).status.code(), Some(0));

    let mut t: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    t["characters"][2][2] = serde_json::json!(1);
    let bad = tmp("s3-bad.json");
    std::fs::write(&bad, serde_json::to_vec(&t).unwrap()).unwrap();
    let out = charval(&["verify", &format!("table:{}", bad.display()), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], false);
}

#[test]
fn verify_named_groups() {
    let r = json(&["verify", "named", "--format", "json", "--jobs", "2"]);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["summary"]["failures"], 0);
    assert_eq!(r["summary"]["four_value_groups"], r["summary"]["structural_matches"]);
    assert_eq!(r["fleet"]["remark-five"]["status"], "pass");
}

#[test]
fn scan_is_deterministic_and_reports_theorem() {
    let path = named_groups();
    let p = path.to_str().unwrap();
    let a = charval(&["scan", p, "--predicates", "theorem", "--format", "json", "--jobs", "3"]);
    let b = charval(&["scan", p, "--predicates", "theorem", "--format", "json", "--jobs", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let four = r["summary"]["four_value_groups"].as_array().unwrap();
    assert_eq!(four.len(), 5);
    assert_eq!(r["summary"]["four_value_groups"], r["summary"]["structural_matches"]);
}

#[test]
fn over_cap_groups_are_skipped_in_scans() {
    let p = named_groups();
    let o = charval(&["scan", p.to_str().unwrap(), "--cap", "60", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r["summary"]["skipped"].as_u64().unwrap() >= 2);
}
