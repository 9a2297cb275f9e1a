use std::path::Path;
use std::process::Command;

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/canonical_instance.json");

fn verify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().unwrap()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn genus_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = verify(&["--suite", "genus", "--samples", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = read_json(&out);
    assert_eq!(r["summary"]["failed"], 0);
    let checks = r["entries"][0]["checks"].as_array().unwrap();
    let g = checks.iter().find(|c| c["name"] == "g_Z").unwrap();
    assert_eq!(g["expected"], 13);
    assert_eq!(g["computed"], 13);
    assert!(g["provenance"].as_str().is_some());
}

#[test]
fn report_goes_to_stdout_without_out() {
    let o = verify(&["--suite", "split,koszul", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn fixed_points_on_sampled_instances() {
    let o = verify(&["--suite", "fixed-points", "--samples", "5", "--seed", "1", "--primes", "10007,10009"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = r["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    for e in entries {
        let total = e["checks"].as_array().unwrap().iter().find(|c| c["name"] == "total").unwrap();
        assert_eq!(total["computed"], 8);
    }
}

#[test]
fn loaded_instance_and_prime_field() {
    let o = verify(&["--suite", "discriminant,cone", "--instance", FIXTURE]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let o = verify(&["--suite", "fiber-action", "--samples", "2", "--field", "101"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn deterministic_output() {
    let args = ["--suite", "discriminant,quotient", "--samples", "2", "--seed", "9"];
    let strip = |o: std::process::Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            e["elapsed_ms"] = 0.into();
        }
        v
    };
    assert_eq!(strip(verify(&args)), strip(verify(&args)));
}

#[test]
fn exit_code_two_on_bad_input() {
    assert_eq!(verify(&["--suite", ""]).status.code(), Some(2));
    assert_eq!(verify(&["--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(verify(&["--samples", "0", "--suite", "genus"]).status.code(), Some(2));
    assert_eq!(verify(&["--primes", "3", "--suite", "genus"]).status.code(), Some(2));
    assert_eq!(verify(&["--field", "x", "--suite", "genus"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(FIXTURE).unwrap().replacen("\"1\"", "\"1/0\"", 1);
    std::fs::write(&bad, text).unwrap();
    let o = verify(&["--suite", "series", "--instance", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("l00"));
    assert_eq!(verify(&["--suite", "series", "--instance", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn exit_code_one_on_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("noquadric.json");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(FIXTURE).unwrap()).unwrap();
    v["quadrics"] = serde_json::json!([]);
    std::fs::write(&path, v.to_string()).unwrap();
    let o = verify(&["--suite", "series,genus", "--instance", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
