use std::path::PathBuf;
use std::process::{Command, Output};

fn semiadd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiadd")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semiadd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_suite_exits_zero() {
    let out = semiadd(&["--suite", "ktrivial5.1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn ext_suite_on_the_default_window() {
    let out = semiadd(&["--suite", "ext6.3", "--lattice", "boolean:1", "--tmodule", "self", "--window", "3", "--depth", "2", "--field", "f:2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(semiadd(&["--suite", "nope"]).status.code(), Some(2));
    assert_eq!(semiadd(&["--suite", "tor4.5", "--field", "f:6"]).status.code(), Some(2));
    assert_eq!(semiadd(&["--suite", "tor4.5", "--cap-matrix", "0"]).status.code(), Some(2));
    let bad = scratch("bad.lattice");
    std::fs::write(&bad, "lattice 3\n1 1 1\n0 1\n").unwrap();
    let out = semiadd(&["--suite", "tor4.5", "--lattice", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn failing_assertions_exit_one() {
    // A matrix cap this small turns the window computations into failed assertions.
    let out = semiadd(&["--suite", "tor4.5", "--field", "f:2", "--cap-matrix", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn json_is_byte_identical_and_follows_the_schema() {
    let args = ["--suite", "tor4.5", "--field", "f:2", "--field", "q", "--window", "2", "--json", "--no-timing"];
    let (a, b) = (semiadd(&args), semiadd(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "tor4.5");
    let comps = v["computations"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    for c in comps {
        assert!(c["lattice"].is_string() && c["field"].is_string());
        assert!(c["functor_A"].is_string() && c["functor_B"].is_string());
        assert!(c["window"].as_array().unwrap().iter().all(|x| x.is_u64()));
        assert!(c["resolution"].is_object());
        assert!(c["tor"].is_array() && c["ext"].is_array());
        assert!(c["certified"].as_bool().unwrap());
        assert_eq!(c["elapsed_ms"], 0);
    }
}

#[test]
fn out_file_receives_the_report() {
    let path = scratch("report.json");
    let out = semiadd(&["--suite", "ktrivial5.1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn tmodule_file_is_accepted() {
    // The two-element chain acting on itself by meet.
    let path = scratch("u.tmod");
    std::fs::write(&path, "monoid 2 zero=0\n0 1\n1 1\naction 2 2\n0 0\n0 1\n").unwrap();
    let out = semiadd(&["--suite", "ext6.3", "--tmodule", path.to_str().unwrap(), "--window", "2", "--field", "f:2"]);
    assert_eq!(out.status.code(), Some(0), "{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
}
