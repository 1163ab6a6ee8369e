//! End-to-end CLI tests: golden-file comparisons for the stable JSON and
//! text outputs, exit-code contract, and edge-list file input.

use std::io::Write;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_forcelab"))
}

fn golden(name: &str) -> Vec<u8> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read(&path).unwrap_or_else(|e| panic!("missing golden file {path}: {e}"))
}

fn run(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = bin().args(args).output().expect("run binary");
    (out.stdout, out.status.code())
}

#[test]
fn solve_hypercube_json_golden() {
    let (stdout, code) =
        run(&["solve", "--family", "hypercube", "--d", "3", "--leaks", "1", "--output", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("solve_q3_l1.json"));
    let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(v["z_value"], 4);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn check_passing_set_prints_ok() {
    let (stdout, code) =
        run(&["check", "--family", "gp", "--n", "3", "--k", "1", "--set", "3,4,5", "--leaks", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("check_gp31_l1.txt"));
    assert_eq!(String::from_utf8(stdout).unwrap(), "ok\n");
}

#[test]
fn check_failing_set_prints_certificate_and_exits_zero() {
    let (stdout, code) =
        run(&["check", "--family", "gp", "--n", "3", "--k", "1", "--set", "3,4,5", "--leaks", "2"]);
    assert_eq!(code, Some(0), "an answered check exits 0");
    assert_eq!(stdout, golden("check_gp31_l2_cert.json"));
    let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(v["leaks"], serde_json::json!([3, 4]));
    assert_eq!(v["stalled"], serde_json::json!([0, 1]));
}

#[test]
fn verify_cubes_json_golden() {
    let (stdout, code) = run(&["verify-paper", "--suite", "cubes", "--output", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("verify_cubes.json"));
}

#[test]
fn chain_json_golden() {
    let (stdout, code) =
        run(&["chain", "--family", "path", "--n", "4", "--leaks", "1", "--output", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("chain_p4.json"));
}

#[test]
fn containment_json_golden() {
    let (stdout, code) =
        run(&["containment", "--family", "wheel", "--n", "5", "--leaks", "2", "--output", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("containment_w5.json"));
}

#[test]
fn families_describe_golden() {
    let (stdout, code) = run(&["families", "--describe"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout, golden("families_describe.txt"));
}

#[test]
fn edge_list_file_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# a five-cycle\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
    let path = file.path().to_str().unwrap();
    let (stdout, code) =
        run(&["solve", "--graph", path, "--leaks", "0", "--output", "json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(v["z_value"], 2, "zero forcing number of C_5");
}

#[test]
fn trace_flag_appends_the_forcing_trace() {
    let (stdout, code) = run(&[
        "check", "--family", "path", "--n", "3", "--set", "0", "--leaks", "0", "--trace",
    ]);
    assert_eq!(code, Some(0));
    let text = String::from_utf8(stdout).unwrap();
    assert!(text.starts_with("ok\n"));
    let trace: serde_json::Value = serde_json::from_str(&text["ok\n".len()..]).unwrap();
    assert_eq!(trace["events"][0], serde_json::json!({"forcer": 0, "forced": 1}));
    assert_eq!(trace["final"], serde_json::json!([0, 1, 2]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["solve", "--family", "nosuch", "--n", "4"],
        vec!["solve", "--family", "gp", "--n", "3"], // missing --k
        vec!["solve"],                               // no graph source
        vec!["check", "--family", "path", "--n", "3", "--set", "9", "--leaks", "0"],
        vec!["solve", "--family", "path", "--n", "3", "--leaks", "7"],
        vec!["solve", "--family", "hypercube", "--d", "9"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
    // conflicting graph sources
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "0 1").unwrap();
    let out = bin()
        .args(["solve", "--family", "path", "--n", "3", "--graph", file.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn worker_count_does_not_change_bytes() {
    let run_with = |workers: &str| {
        let out = bin()
            .args([
                "verify-paper", "--suite", "halfcube", "--output", "json", "--workers", workers,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(run_with("1"), run_with("3"));
}

#[test]
fn solve_reports_bounds_when_budget_is_tiny() {
    let (stdout, code) = run(&[
        "solve", "--family", "hypercube", "--d", "4", "--leaks", "2", "--budget-evals", "10",
        "--output", "json",
    ]);
    assert_eq!(code, Some(1), "budget exceeded without an answer exits 1");
    let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(v["status"], "unknown");
    assert!(v["lower"].as_u64().unwrap() >= 1);
    assert_eq!(v["upper"], 16);
}
