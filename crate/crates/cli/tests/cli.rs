//! End-to-end tests of the `isodistill` binary: output schemas, determinism,
//! flag handling, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isodistill"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn sweep_emits_the_documented_csv_schema() {
    let output = run(&["sweep", "--F", "0.502", "--F", "0.7"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "alpha,n_z,N_z,F=0.502_x2,F=0.502_negativity,F=0.502_distillable,\
         F=0.7_x2,F=0.7_negativity,F=0.7_distillable"
    );
    assert_eq!(text.lines().count(), 202); // header + 201 rows
    let first = lines.next().unwrap();
    assert!(first.starts_with("0.0000000000000000e0,1.0000000000000000e0,5.0000000000000000e-1,"));
    // booleans as 0/1: F = 0.502 and 0.7 are both distillable at rest
    assert!(first.ends_with(",1"));
    assert!(!text.contains('\r'));
}

#[test]
fn sweep_output_is_byte_identical_across_runs() {
    let args = ["sweep", "--F", "0.502", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("config.json");
    std::fs::write(&path, r#"{"alpha_steps": 5, "alpha_max": 2.0}"#).unwrap();
    let output = run(&[
        "sweep",
        "--config",
        path.to_str().unwrap(),
        "--alpha-steps",
        "3",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout_of(&output).lines().count(), 4); // header + 3 rows
}

#[test]
fn config_can_come_from_stdin() {
    let mut child = binary()
        .args(["sweep", "--config", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"alpha_steps": 2, "alpha_max": 1.0}"#)
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(stdout_of(&output).lines().count(), 3);
}

#[test]
fn malformed_config_exits_2_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");

    std::fs::write(&path, r#"{"alpha_steps": }"#).unwrap();
    let output = run(&["sweep", "--config", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("config error"), "{stderr}");
    assert!(stderr.contains("line 1"), "missing position: {stderr}");

    std::fs::write(&path, r#"{"alpha_mx": 3}"#).unwrap();
    let output = run(&["sweep", "--config", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("alpha_mx"));

    let output = run(&["sweep", "--F", "1.5"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["sweep", "--config", "/nonexistent/config.json"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["sweep", "--format", "xml"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("csv or json"));
}

#[test]
fn tolerance_compare_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let reference = dir.path().join("sweep.csv");

    let golden = run(&["sweep", "--F", "0.7", "--alpha-steps", "11"]);
    assert!(golden.status.success());
    std::fs::write(&reference, &golden.stdout).unwrap();

    // same run compares clean and prints nothing to stdout
    let compared = run(&[
        "sweep",
        "--F",
        "0.7",
        "--alpha-steps",
        "11",
        "--tolerance-compare",
        reference.to_str().unwrap(),
    ]);
    assert!(compared.status.success());
    assert!(compared.stdout.is_empty());
    assert!(String::from_utf8_lossy(&compared.stderr).contains("matches"));

    // a perturbation beyond 1e-12 fails with exit code 1
    let mut text = stdout_of(&golden);
    text = text.replace("5.0000000000000000e-1", "5.0000100000000000e-1");
    std::fs::write(&reference, text).unwrap();
    let mismatched = run(&[
        "sweep",
        "--F",
        "0.7",
        "--alpha-steps",
        "11",
        "--tolerance-compare",
        reference.to_str().unwrap(),
    ]);
    assert_eq!(mismatched.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&mismatched.stderr).contains("mismatch"));
}

#[test]
fn classify_json_matches_schema() {
    let output = run(&[
        "classify",
        "--F",
        "0.7",
        "--F",
        "0.3",
        "--alpha-max",
        "3",
        "--alpha-steps",
        "7",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["measure"], "negativity");
    assert_eq!(value["frames"].as_array().unwrap().len(), 7);
    let results = value["results"].as_array().unwrap();
    assert_eq!(results[0]["F"], 0.7);
    assert_eq!(results[0]["wie"], true);
    assert_eq!(results[0]["sid"], false);
    assert_eq!(results[1]["F"], 0.3);
    assert_eq!(results[1]["wie"], false);
    assert_eq!(results[0]["trace"].as_array().unwrap().len(), 7);
}

#[test]
fn classify_without_fidelities_is_a_config_error() {
    let output = run(&["classify"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn conjecture_scan_is_deterministic_and_reports_fractions() {
    let args = [
        "conjecture-scan",
        "--seed",
        "3",
        "--format",
        "json",
        "--config",
        "-",
    ];
    let feed = |args: &[&str]| {
        let mut child = binary()
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(br#"{"ensemble_size": 50}"#)
            .unwrap();
        child.wait_with_output().unwrap()
    };
    let a = feed(&args);
    let b = feed(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let value: serde_json::Value = serde_json::from_str(&stdout_of(&a)).unwrap();
    assert_eq!(value["ensemble"], "random");
    assert_eq!(value["seed"], 3);
    assert_eq!(value["entangled_fraction_above_threshold"], 1.0);
    let entangled = value["entangled_samples"].as_u64().unwrap();
    let separable = value["separable_samples"].as_u64().unwrap();
    assert_eq!(entangled + separable, 50);
}

#[test]
fn validate_warns_on_wide_packets_but_exits_zero() {
    let output = run(&["validate", "--w-over-2m", "0.6", "--format", "json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["physical"], false);
    let warnings = value["warnings"].as_array().unwrap();
    assert!(!warnings.is_empty());
    assert!(warnings[0].as_str().unwrap().contains("localization"));

    let clean = run(&["validate", "--w-over-2m", "0.1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&clean)).unwrap();
    assert_eq!(value["warnings"].as_array().unwrap().len(), 0);
    assert_eq!(value["N_z"]["min"], 0.5);
}

#[test]
fn validate_notes_degenerate_rest_frame_grid() {
    let mut child = binary()
        .args(["validate", "--config", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"alpha_min": 0.0, "alpha_max": 0.0, "alpha_steps": 1}"#)
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let notes = value["notes"].as_array().unwrap();
    assert!(notes[0].as_str().unwrap().contains("rest frame"));
}
