//! End-to-end checks of the command-line surface: output bytes against the
//! committed golden files, the exit-code contract, and file round trips.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sumgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn golden(name: &str) -> String {
    fs::read_to_string(golden_dir().join(name)).expect("golden file exists")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

/// The four worked instances: (golden stem, i, s, m, j).
const WORKED: [(&str, i64, i64, i64, i64); 4] = [
    ("h2s_11_13", 2, 11, 1, 3),
    ("h3s_12_23", 3, 12, 2, 3),
    ("hi2_11_31", 11, 2, 3, 1),
    ("hi3_12_32", 12, 3, 3, 2),
];

fn param_args(head: &[&str], i: i64, s: i64, m: i64, j: i64) -> Vec<String> {
    let mut args: Vec<String> = head.iter().map(|a| a.to_string()).collect();
    for (flag, value) in [("-i", i), ("-s", s), ("-m", m), ("-j", j)] {
        args.push(flag.to_string());
        args.push(value.to_string());
    }
    args
}

fn stdout_of_owned(args: &[String]) -> String {
    let borrowed: Vec<&str> = args.iter().map(String::as_str).collect();
    stdout_of(&borrowed)
}

#[test]
fn build_outputs_match_golden_files() {
    for (stem, i, s, m, j) in WORKED {
        let got = stdout_of_owned(&param_args(&["build", "--family", "h"], i, s, m, j));
        assert_eq!(got, golden(&format!("{stem}.graph.json")), "{stem}");
    }
}

#[test]
fn coloring_outputs_match_golden_files() {
    for (stem, i, s, m, j) in WORKED {
        let got = stdout_of_owned(&param_args(&["color", "--engine", "paper"], i, s, m, j));
        assert_eq!(got, golden(&format!("{stem}.coloring.json")), "{stem}");
    }
}

#[test]
fn dot_exports_match_golden_files() {
    for (stem, _, _, _, _) in WORKED {
        let graph = golden_dir().join(format!("{stem}.graph.json"));
        let coloring = golden_dir().join(format!("{stem}.coloring.json"));
        let got = stdout_of(&[
            "export",
            graph.to_str().unwrap(),
            coloring.to_str().unwrap(),
        ]);
        assert_eq!(got, golden(&format!("{stem}.dot")), "{stem}");
    }
}

#[test]
fn sweep_outputs_match_golden_files() {
    let got = stdout_of(&[
        "sweep", "--family", "h", "--i", "2:3", "--s", "11:12", "--m", "1:2", "--j", "3:3",
    ]);
    assert_eq!(got, golden("sweep_h_worked.csv"));

    let got = stdout_of(&[
        "sweep", "--family", "h", "--i", "11:12", "--s", "2:3", "--m", "3:3", "--j", "1:2",
    ]);
    assert_eq!(got, golden("sweep_hi_worked.csv"));

    let got = stdout_of(&[
        "sweep", "--family", "grs", "--r=-8:-1", "--s", "1:8", "--engines", "edge-sum",
    ]);
    assert_eq!(got, golden("sweep_grs.csv"));
}

#[test]
fn verify_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("sumgraph-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("g.json");
    let coloring_path = dir.join("c.json");

    fs::write(&graph_path, stdout_of(&["build", "--family", "h", "-i", "4", "-s", "3", "-m", "1", "-j", "2"])).unwrap();
    fs::write(&coloring_path, stdout_of(&["color", "--engine", "exact", "-i", "4", "-s", "3", "-m", "1", "-j", "2"])).unwrap();

    let out = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("report is JSON");
    assert_eq!(report["proper"], true);
    assert_eq!(report["complete"], true);
    assert_eq!(report["class_count"], 5);

    // The same coloring against a different graph is incomplete: exit 2.
    fs::write(&graph_path, stdout_of(&["build", "--family", "h", "-i", "4", "-s", "3", "-m", "1", "-j", "1"])).unwrap();
    let out = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["complete"], false);

    fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_contract() {
    // 1: usage errors of every flavor.
    assert_eq!(exit_code(&["build", "--family", "nope", "-n", "3"]), 1);
    assert_eq!(exit_code(&["build", "--family", "h", "-i", "2", "-s", "3", "-m", "2", "-j", "1"]), 1);
    assert_eq!(exit_code(&["color", "--engine", "warp", "-i", "4", "-s", "3", "-m", "1", "-j", "2"]), 1);
    assert_eq!(exit_code(&["color", "--engine", "paper", "-i", "2", "-s", "6", "-m", "1", "-j", "1"]), 1);
    assert_eq!(exit_code(&["frobnicate"]), 1);
    // 3: solver budget.
    assert_eq!(
        exit_code(&["color", "--engine", "exact", "-i", "5", "-s", "5", "-m", "1", "-j", "1", "--time-limit-ms", "0"]),
        3
    );
    assert_eq!(
        exit_code(&["color", "--engine", "exact", "-i", "5", "-s", "5", "-m", "1", "-j", "1", "--max-edges", "2"]),
        3
    );
    // 0: help.
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn empty_range_intersection_yields_header_only_csv() {
    // m=3 can never satisfy m < i = 2, so no instance is valid.
    let got = stdout_of(&[
        "sweep", "--family", "h", "--i", "2:2", "--s", "3:3", "--m", "3:3", "--j", "1:1",
    ]);
    let lines: Vec<&str> = got.lines().collect();
    assert_eq!(
        lines,
        vec![
            "# sumgraph audit v1",
            "family,i,s,m,j,claimed_chi,computed_chi,claimed_zsum,computed_zsum,perfect_claimed,perfect_computed,status",
            "# summary agree=0 deviate=0 unresolved=0 uncovered=0",
        ]
    );
    // An inverted range is a usage error, not an empty sweep.
    assert_eq!(exit_code(&["sweep", "--family", "h", "--i", "5:2", "--s", "3:3", "--m", "1:1", "--j", "1:1"]), 1);
}

#[test]
fn outputs_are_stable_across_runs() {
    for args in [
        vec!["build", "--family", "grs", "-r", "-2", "-s", "3"],
        vec!["color", "--engine", "exact", "-i", "4", "-s", "3", "-m", "1", "-j", "2"],
        vec!["sweep", "--family", "gn", "--n", "1:9", "--engines", "edge-sum"],
    ] {
        assert_eq!(stdout_of(&args), stdout_of(&args), "{args:?}");
    }
}
