use std::process::Command;

use biperron::cli::cache::CacheStatus;
use biperron::cli::run;
use serde_json::Value;

fn run_with(cache: &std::path::Path, args: &[&str]) -> biperron::cli::RunOutcome {
    let mut full = vec!["biperron", "--cache-dir", cache.to_str().unwrap()];
    full.extend_from_slice(args);
    run(full)
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("stdout is JSON")
}

#[test]
fn classify_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_with(dir.path(), &["classify", "--poly", "1,-1,-1"]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["bi_perron"], true);
    assert_eq!(v["result"]["minus_inverse"], true);
    assert_eq!(v["result"]["leading_root"]["decimal"], "1.618033988750");
    assert_eq!(out.cache, CacheStatus::NotUsed);
}

#[test]
fn coxeter_e10_radius() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_with(dir.path(), &["coxeter", "--graph", "E10"]);
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    let r: f64 = v["result"]["spectral_radius_decimal"].as_str().unwrap().parse().unwrap();
    assert!((r - 1.17628).abs() < 1e-4);
    assert_eq!(v["result"]["spectral_radius_minpoly"], "1,1,0,-1,-1,-1,-1,-1,0,1,1");
}

#[test]
fn thurston_and_powermin() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&run_with(dir.path(), &["thurston", "--r-minpoly", "1,-3"]).stdout);
    assert_eq!(v["result"]["trace"], "-7");
    let v = json(&run_with(dir.path(), &["powermin", "--poly", "1,-1,-1", "--k", "2"]).stdout);
    assert_eq!(v["result"]["minpoly"], "1,-3,1");
}

#[test]
fn realize_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_with(dir.path(), &["realize", "--poly", "1,-1,-1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&out.stdout);
    assert_eq!(v["result"]["power_realized"], 4);
    assert_eq!(v["result"]["graph_vertices"], 6);
    assert!(v["check_log"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let file = dir.path().join("cert.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let checked = run(["biperron", "--verify", file.to_str().unwrap()]);
    assert_eq!(checked.code, 0, "{}", checked.stdout);
    assert_eq!(json(&checked.stdout)["command"], "verify");

    let mut forged = v.clone();
    forged["result"]["power_realized"] = 5.into();
    std::fs::write(&file, forged.to_string()).unwrap();
    assert_eq!(run(["biperron", "--verify", file.to_str().unwrap()]).code, 1);
}

#[test]
fn cache_hit_miss_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["realize", "--poly", "1,-1,-1", "--k-max", "4"];
    let first = run_with(dir.path(), &args);
    assert_eq!(first.cache, CacheStatus::Miss);
    let second = run_with(dir.path(), &args);
    assert_eq!(second.cache, CacheStatus::Hit);
    assert_eq!(first.stdout, second.stdout);

    let other = run_with(dir.path(), &["realize", "--poly", "1,-1,-1", "--k-max", "8"]);
    assert_eq!(other.cache, CacheStatus::Miss);

    let hash = json(&first.stdout)["input_hash"].as_str().unwrap().to_string();
    let entry = dir.path().join(format!("{hash}.json"));
    assert!(entry.exists());
    std::fs::write(&entry, "{\"sha256\":\"00\",\"payload\":{}}").unwrap();
    let third = run_with(dir.path(), &args);
    assert_eq!(third.cache, CacheStatus::Corrupt);
    assert!(!third.warnings.is_empty());
    assert_eq!(third.stdout, first.stdout);
    assert_eq!(run_with(dir.path(), &args).cache, CacheStatus::Hit);
}

#[test]
fn unwritable_cache_warns_and_continues() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "not a directory").unwrap();
    let out = run_with(&blocker.join("cache"), &["realize", "--poly", "1,-1,-1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.cache, CacheStatus::Disabled);
    assert!(!out.warnings.is_empty());
}

#[test]
fn malformed_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_with(dir.path(), &["classify", "--poly", "1,x,3"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["error"]["kind"], "parse");
    let out = run_with(dir.path(), &["realize", "--poly", "1,0,-1,-1"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["error"]["kind"], "precondition");
}

#[test]
fn exhausted_bounds_are_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_with(dir.path(), &["tree-realize", "--poly", "1,-1,-1", "--max-vertices", "4"]);
    assert_eq!(out.code, 2, "{}", out.stdout);
    assert_eq!(json(&out.stdout)["error"]["kind"], "inconclusive");
}

#[test]
fn output_independent_of_jobs() {
    let bin = env!("CARGO_BIN_EXE_biperron");
    let outputs: Vec<_> = ["1", "4"]
        .iter()
        .map(|jobs| {
            let dir = tempfile::tempdir().unwrap();
            let out = Command::new(bin)
                .args(["--jobs", jobs, "--cache-dir", dir.path().to_str().unwrap()])
                .args(["generate", "--epsilon", "1/2", "--max-degree", "2", "--max-height", "3"])
                .output()
                .unwrap();
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_biperron");
    let ok = Command::new(bin).args(["classify", "--poly", "1,-1,-1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["classify", "--poly", ""]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
