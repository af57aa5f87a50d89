use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_poisson-forge");

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(name: &str) -> String {
    let o = run(&["catalog", "emit", name], None);
    assert_eq!(code(&o), 0, "emit {name}");
    stdout(&o)
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn verify_reads_stdin_and_reports_through_exit_codes() {
    let good = run(&["verify", "--set", "PA,PC,PB"], Some(&emit("dual_numbers")));
    assert_eq!(code(&good), 0);
    assert_eq!(stdout(&good), "PA: pass\nPC: pass\nPB: pass\n");

    let bad = run(&["verify", "--set", "PA", "--json"], Some(&emit("bad_bracket")));
    assert_eq!(code(&bad), 1);
    let report: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    let first = &report["sets"][0]["violations"][0];
    assert_eq!(first["law"], "PA1");
    assert_eq!(first["tuple"], serde_json::json!([0, 0]));
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    assert_eq!(code(&run(&["bogus"], None)), 2);
    assert_eq!(code(&run(&["verify", "--set", "PA"], Some("{ not json"))), 2);
    assert_eq!(code(&run(&["verify", "--set", "NOPE"], Some(&emit("idem1")))), 2);
    assert_eq!(code(&run(&["catalog", "emit", "no_such_fixture"], None)), 2);
}

#[test]
fn build_split_and_equiv_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let datum = path(dir.path(), "datum.json");
    let built = path(dir.path(), "built.json");
    let split = path(dir.path(), "split.json");
    assert_eq!(code(&run(&["catalog", "emit", "central_ext_a1", "-o", &datum], None)), 0);
    assert_eq!(code(&run(&["build", &datum, "--kind", "a1", "-o", &built], None)), 0);
    assert_eq!(code(&run(&["verify", &built, "--set", "PA"], None)), 0);
    assert_eq!(code(&run(&["split", &built, "--kind", "a1", "-o", &split], None)), 0);
    let again = run(&["build", &split, "--kind", "a1"], None);
    assert_eq!(code(&again), 0);
    assert_eq!(stdout(&again), std::fs::read_to_string(&built).unwrap());

    let rational = run(&["equiv", &datum, &split, "--kind", "a1"], None);
    assert_eq!(code(&rational), 2);
    assert!(String::from_utf8_lossy(&rational.stderr).contains("finite field"));
}

#[test]
fn planted_pair_is_found_and_its_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let left = path(dir.path(), "left.json");
    let right = path(dir.path(), "right.json");
    let pair = path(dir.path(), "pair.json");
    for (name, file) in [
        ("planted_equiv_left_f2", &left),
        ("planted_equiv_right_f2", &right),
        ("planted_equiv_pair_f2", &pair),
    ] {
        assert_eq!(code(&run(&["catalog", "emit", name, "-o", file], None)), 0);
    }
    let found = run(&["equiv", &left, &right, "--kind", "c2", "--field", "2", "--json"], None);
    assert_eq!(code(&found), 0);
    let v: serde_json::Value = serde_json::from_slice(&found.stdout).unwrap();
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["verified"], true);

    assert_eq!(code(&run(&["equiv", &left, &right, "--kind", "c2", "--witness", &pair], None)), 0);
    assert_eq!(code(&run(&["equiv", &left, &right, "--kind", "c2", "--field", "3"], None)), 2);
}

#[test]
fn classify_prints_counts_and_honours_the_budget() {
    let o = run(&["classify", "--kind", "a1", "--dimA", "1", "--dimV", "1", "--field", "2", "--amended"], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("kind a1, dim A 1, dim V 1, F2: 128 candidates, 7 valid, 7 classes\n"));
    let capped = run(&["classify", "--kind", "c2", "--dimA", "0", "--dimV", "2", "--field", "2", "--budget", "5"], None);
    assert_eq!(code(&capped), 3);
}
