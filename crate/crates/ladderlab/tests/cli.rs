//! End-to-end tests of the binary: exit codes, frozen report values, and
//! byte determinism of both reports and written files.

use serde_json::Value;
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladderlab"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("reports are JSON")
}

fn temp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ladderlab-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).expect("temp dir");
    dir
}

/// Writes the fixture corpus and returns the path of one named document.
fn exported(dir: &PathBuf, name: &str) -> String {
    let out = run(&["export", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    dir.join(format!("{name}.json")).to_str().unwrap().to_string()
}

#[test]
fn export_is_byte_deterministic() {
    let d1 = temp_dir("exp1");
    let d2 = temp_dir("exp2");
    for d in [&d1, &d2] {
        let out = run(&["export", "--out", d.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let mut names: Vec<String> = fs::read_dir(&d1)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.len() >= 10, "the corpus has at least 10 fixtures");
    for name in names {
        let a = fs::read(d1.join(&name)).unwrap();
        let b = fs::read(d2.join(&name)).unwrap();
        assert_eq!(a, b, "{name} must serialize identically across runs");
    }
}

#[test]
fn random_export_depends_only_on_the_seed() {
    let d1 = temp_dir("rnd1");
    let d2 = temp_dir("rnd2");
    let d3 = temp_dir("rnd3");
    for (d, seed) in [(&d1, "7"), (&d2, "7"), (&d3, "8")] {
        let out = run(&["export", "--random", "4", "--seed", seed, "--out", d.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let same = |d: &PathBuf| fs::read(d.join("random-000.json")).unwrap();
    assert_eq!(same(&d1), same(&d2), "equal seeds produce equal corpora");
    assert_ne!(same(&d1), same(&d3), "different seeds differ somewhere");
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = temp_dir("verify");
    let diamond = exported(&dir, "diamond-paper");

    let ok = run(&["verify", &diamond]);
    assert_eq!(ok.status.code(), Some(0));
    let report = stdout_json(&ok);
    assert_eq!(report["elements"], 4);
    assert_eq!(report["breadth"], 2);
    assert_eq!(report["is_lattice"], true);
    assert_eq!(report["norm"]["transitive"], true);

    let graded = run(&["verify", &diamond, "--ladder", "2"]);
    assert_eq!(graded.status.code(), Some(0));

    let failed = run(&["verify", &diamond, "--ladder", "1"]);
    assert_eq!(
        failed.status.code(),
        Some(1),
        "a failed grade claim is a verification failure"
    );

    let cyclic = dir.join("cyclic.json");
    fs::write(
        &cyclic,
        r#"{"elements":["a","b"],"le":[["a","b"],["b","a"]]}"#,
    )
    .unwrap();
    let bad = run(&["verify", cyclic.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2), "a cycle is an input error");

    let missing = run(&["verify", dir.join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));

    let usage = run(&["verify"]);
    assert_eq!(usage.status.code(), Some(2), "usage errors exit 2");
}

#[test]
fn amalgamate_matches_the_frozen_table() {
    let dir = temp_dir("amalgam");
    let diamond = exported(&dir, "diamond-paper");
    let out = run(&[
        "amalgamate",
        &diamond,
        "--delta",
        "1",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["elements"], 10);
    assert_eq!(report["range"], 5);
    assert_eq!(report["pairs"], 3);
    assert_eq!(report["max_lower_covers"], 2);
    assert_eq!(report["cover_mismatches"], 0);
    assert_eq!(report["verified"], true);

    let written = fs::read_to_string(dir.join("amalgam.json")).unwrap();
    let reread = run(&["verify", dir.join("amalgam.json").to_str().unwrap()]);
    assert_eq!(
        reread.status.code(),
        Some(0),
        "written amalgams verify: {}",
        String::from_utf8_lossy(&reread.stderr)
    );
    assert!(written.contains("\"norm\""), "written amalgams carry norms");

    let glued = run(&["amalgamate", &diamond, "--delta", "2", "--chain", "{1},{0,1}"]);
    assert_eq!(glued.status.code(), Some(0));
    let report = stdout_json(&glued);
    assert_eq!(report["elements"], 8);
    assert_eq!(report["range"], 4);
    assert_eq!(report["max_lower_covers"], 3);

    let bad_delta = run(&["amalgamate", &diamond, "--delta", "9"]);
    assert_eq!(bad_delta.status.code(), Some(2), "an unusable cut is an input error");
}

#[test]
fn skeleton_reports_a_verified_run() {
    let dir = temp_dir("skeleton");
    let file = exported(&dir, "grid-3x3-created");
    let out = run(&["skeleton", &file]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["elements"], 9);
    assert_eq!(report["verified"], true);
    assert_eq!(
        report["stage_sizes"].as_array().unwrap().len(),
        10,
        "one stage per anchor plus the start"
    );
}

#[test]
fn grow_matches_the_frozen_sizes() {
    let out = run(&["grow", "--stages", "4", "--ladder", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(
        report["stage_sizes"],
        serde_json::json!([4, 6, 8, 10, 12])
    );

    let out = run(&["grow", "--stages", "5"]);
    let report = stdout_json(&out);
    assert_eq!(
        report["stage_sizes"],
        serde_json::json!([1, 2, 4, 7, 11, 16])
    );
}

#[test]
fn morass_report_is_deterministic_and_frozen() {
    let first = run(&["morass", "--deltas", "1,2"]);
    let second = run(&["morass", "--deltas", "1,2"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "reports are byte-stable");
    let report = stdout_json(&first);
    assert_eq!(report["level_sizes"], serde_json::json!([4, 9, 17]));
    assert_eq!(report["thetas"], serde_json::json!([2, 3, 4]));
    assert_eq!(report["tree_coherent"], true);
    assert_eq!(report["system_laws_hold"], true);
    assert_eq!(report["base_amended"], false);
    assert_eq!(report["limit_object"], 2);

    let wide = run(&["morass", "--deltas", "2,1", "--base", "paper", "--theta0", "3"]);
    assert_eq!(wide.status.code(), Some(0));
    let report = stdout_json(&wide);
    assert_eq!(report["level_sizes"], serde_json::json!([4, 8, 21]));
    assert_eq!(report["base_amended"], true);
    assert!(report["axioms"]["p0-base-width"].is_object(), "the wide base fails p0");

    let bad = run(&["morass", "--deltas", "0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn closure_matches_the_frozen_sizes() {
    let out = run(&["closure", "--ground", "6", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["elements"], 26);
    assert_eq!(report["breadth"], 3);
    assert_eq!(report["generators"], 6);
    assert_eq!(report["atomistic"], true);

    let bad = run(&["closure", "--ground", "3", "--n", "2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn documents_round_trip_through_the_tool() {
    let dir = temp_dir("roundtrip");
    let out = run(&["export", "--out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for entry in fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let verify = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(
            verify.status.code(),
            Some(0),
            "every exported fixture verifies: {path:?}"
        );
    }
}
