use std::process::{Command, Output};

use freejord::format::algebra_to_json;
use freejord_core::tkk::samples::symmetric_2x2;
use serde_json::Value;

fn freejord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freejord"))
        .args(args)
        .env_remove("FREEJORD_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn predict_dims_json() {
    let v = json(&freejord(&["predict-dims", "--max-degree", "19", "--json"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 19);
    assert_eq!(rows[18]["predicted"], 262658);
    assert_eq!(rows[18]["actual"], 262656);
    assert_eq!(rows[18]["residue"], 2);
    assert_eq!(rows[17]["residue"], 0);
}

#[test]
fn csv_has_header() {
    let out = freejord(&["two-gen", "--max-degree", "3", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,reversible_dim,jordan_span_dim,b_dim,predicted_a,predicted_b,a_match,b_match");
    assert_eq!(lines.next().unwrap(), "1,2,2,0,2,0,true,true");
}

#[test]
fn exit_codes() {
    assert_eq!(freejord(&["operad", "--degree", "8"]).status.code(), Some(3));
    assert_eq!(freejord(&["operad", "--degree", "4", "--lambda", "3,2"]).status.code(), Some(2));
    assert_eq!(freejord(&["operad", "--degree", "4", "--prime", "4", "--prime", "7"]).status.code(), Some(2));
    assert_eq!(freejord(&["tag"]).status.code(), Some(2));
    assert_eq!(freejord(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(freejord(&["tag", "--free", "3,9"]).status.code(), Some(3));
}

#[test]
fn operad_with_oracle() {
    let v = json(&freejord(&["operad", "--degree", "5", "--oracle", "--json"]));
    for row in v.as_array().unwrap() {
        assert_eq!(row["multiplicity"], row["oracle"]);
    }
}

#[test]
fn tag_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("j.json");
    let dump = dir.path().join("tag.json");
    std::fs::write(&input, algebra_to_json(&symmetric_2x2()).to_string()).unwrap();
    let v = json(&freejord(&[
        "tag",
        "--input",
        input.to_str().unwrap(),
        "--homology",
        "2",
        "--dump",
        dump.to_str().unwrap(),
        "--json",
    ]));
    let get = |k: &str| v.as_array().unwrap().iter().find(|r| r["quantity"] == k).unwrap()["value"].clone();
    assert_eq!(get("dim J"), 3);
    assert_eq!(get("dim Inner(J)"), 1);
    let lie = freejord::format::parse_algebra(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(Value::from(lie.dim() as u64), get("dim TAG(J)"));

    std::fs::write(&input, "{\"dim\": 2, \"table\": []}").unwrap();
    assert_eq!(freejord(&["tag", "--input", input.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = freejord(&["operad", "--degree", "6", "--cache-dir", cache, "--json"]);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0);
    let second = freejord(&["operad", "--degree", "6", "--cache-dir", cache, "--json"]);
    assert_eq!(json(&first), json(&second));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), entries);
}

#[test]
fn verify_homology_suite() {
    let out = freejord(&["verify", "--suite", "homology", "--json"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["pass"] == true));
}
