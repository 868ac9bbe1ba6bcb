use std::process::Command;

use serde_json::Value;

fn rootpoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rootpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn report_counts() {
    let (code, out, _) = rootpoly(&["report", "--family", "A", "--rank", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["facets"], 14);
    assert_eq!(v["payload"]["T"], 20);
    assert_eq!(v["payload"]["T_plus"], 5);
    assert_eq!(v["meta"]["family"], "A");

    let (_, out, _) = rootpoly(&["report", "--family", "C", "--rank", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["T"], 8);
    assert_eq!(v["payload"]["T_plus"], 3);
    assert_eq!(v["payload"]["regions"], 4);

    let (_, out, _) = rootpoly(&["report", "--family", "B", "--rank", "4"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["regions_vs_facets"]["coincide"], false);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let a = rootpoly(&["triangulate", "--family", "A", "--rank", "4", "--jobs", "1"]).1;
    let b = rootpoly(&["triangulate", "--family", "A", "--rank", "4", "--jobs", "4"]).1;
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["payload"]["count"], 70);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", a);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("rootpoly-cli-{}.json", std::process::id()));
    let (code, out, _) = rootpoly(&[
        "arrangement",
        "--family",
        "C",
        "--rank",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["payload"]["regions"], 8);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn diagrams() {
    let (code, out, _) = rootpoly(&["diagram", "--family", "C", "--rank", "2", "--apex", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("ideal").count(), 2);
    let (_, out, _) = rootpoly(&["diagram", "--family", "A", "--rank", "3", "--ideal", "0"]);
    assert!(!out.contains('#') && !out.contains('@'));
    assert_eq!(out.matches('.').count(), 6);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rootpoly(&["report", "--family", "E", "--rank", "6"]).0, 2);
    assert_eq!(rootpoly(&["report", "--family", "D", "--rank", "2"]).0, 2);
    assert_eq!(rootpoly(&["report"]).0, 2);
    let (code, _, err) = rootpoly(&["diagram", "--family", "A", "--rank", "3", "--ideal", "zz"]);
    assert_eq!(code, 2);
    assert!(err.contains("zz"));
    assert_eq!(
        rootpoly(&["diagram", "--family", "B", "--rank", "3", "--apex", "1"]).0,
        2
    );
    assert_eq!(rootpoly(&["triangulate", "--family", "D", "--rank", "4"]).0, 2);
}

#[test]
fn verify_flag() {
    let (code, out, _) = rootpoly(&["verify", "--family", "A", "--rank", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["ok"], true);
    assert_eq!(rootpoly(&["report", "--family", "C", "--rank", "3", "--verify"]).0, 0);
}
