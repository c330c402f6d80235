use std::process::Command;

use ci_semigroups_cli::run;

fn cisg(args: &[&str]) -> ci_semigroups_cli::Output {
    run(std::iter::once("cisg").chain(args.iter().copied()))
}

#[test]
fn classify_json_schema() {
    let out = cisg(&["classify", "4,6,13", "--json"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("}\n"));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["flags"]["plane_branch"], true);
    assert_eq!(v["flags"]["unique_betti"], false);
    assert_eq!(v["witnesses"]["betti_a"], serde_json::Value::Null);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["flags", "generators", "witnesses"].to_vec());
    assert!(out.stdout.starts_with("{\"generators\":[4,6,13],\"flags\":{\"plane_branch\":true,"));
}

#[test]
fn gcd_error_exits_two() {
    let out = cisg(&["classify", "4,6"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("gcd of generators must be 1"));
    assert_eq!(cisg(&["classify", "4,x"]).code, 2);
    assert_eq!(cisg(&["classify", ""]).code, 2);
}

#[test]
fn unknown_subcommand_prints_usage() {
    let out = cisg(&["frobnicate"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Usage"));
    assert_eq!(cisg(&["classify", "3,5", "--yaml"]).code, 2);
}

#[test]
fn invariants_json() {
    let out = cisg(&["invariants", "8,10,11,12"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["beta"], serde_json::json!([1, 3, 1]));
    assert_eq!(v["gamma"], serde_json::json!([1, 1, 1]));
    let out = cisg(&["invariants", "4,6,13"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["tau"], serde_json::json!([1, 1]));
    assert_eq!(v["plane_branch_gaps"], serde_json::json!([1]));
}

#[test]
fn apery_and_factorize() {
    assert_eq!(cisg(&["apery", "4,6,13"]).stdout, "0,6,13,19\n");
    assert_eq!(cisg(&["apery", "5,6,9", "6"]).stdout, "0,5,9,10,14,19\n");
    assert_eq!(cisg(&["apery", "5,6,9", "7"]).code, 2);
    let out = cisg(&["factorize", "8,10,15", "33"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["order"], 3);
    assert!(cisg(&["factorize", "8,10,15", "37"]).stdout.contains("\"reps\":[]"));
}

#[test]
fn glue_family_and_build() {
    let out = cisg(&["glue", "2,3|11|2,3|7"]);
    assert!(out.stdout.starts_with("semigroup: 14,21,22,33\n"));
    assert!(out.stdout.contains("complete_intersection: true"));
    assert!(out.stdout.contains("free: false"));
    let bad = cisg(&["glue", "2,3|3|2,3|7"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("invalid gluing"));
    let out = cisg(&["family", "rb", "2", "5", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["semigroup"], "8,13,18,28");
    assert_eq!(v["flags"]["alpha_rect"], true);
    assert_eq!(v["flags"]["telescopic"], false);
    assert_eq!(cisg(&["family", "cinf", "2", "3", "5", "7"]).code, 2);
    assert!(cisg(&["build-alpha", "12", "3"]).stdout.starts_with("semigroup: 12,13,15\n"));
    assert_eq!(cisg(&["build-alpha", "8", "5"]).code, 2);
}

#[test]
fn sweep_json_and_csv() {
    let out = cisg(&["sweep", "--genus-max", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["total"], 50);
    assert_eq!(v["per_genus"], serde_json::json!([1, 1, 2, 4, 7, 12, 23]));
    assert_eq!(v["violations"], serde_json::json!([]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let with_csv = cisg(&["sweep", "--genus-max", "6", "--json", "--csv", path.to_str().unwrap()]);
    assert_eq!(with_csv.stdout, out.stdout);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "generators,genus,plane_branch,unique_betti,telescopic,alpha_rect,beta_rect,gamma_rect,free,complete_intersection,symmetric,m_pure"
    );
    assert_eq!(lines.next().unwrap(), "1,0,1,0,1,1,1,1,1,1,1,1");
    assert_eq!(lines.count(), 49);
}

#[test]
fn output_is_byte_stable() {
    let a = cisg(&["classify", "36,42,54,69,70", "--json"]);
    let b = cisg(&["classify", "36,42,54,69,70", "--json"]);
    assert_eq!(a, b);
    assert_eq!(cisg(&["sweep", "--genus-max", "5"]), cisg(&["sweep", "--genus-max", "5"]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cisg");
    let ok = Command::new(bin).args(["classify", "6,10,15"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8(ok.stdout).unwrap().contains("betti_a: 5,3,2"));
    let bad = Command::new(bin).args(["classify", "4,6"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
