//! End-to-end checks of the binary: flags, environment seed, exit codes.

use std::path::PathBuf;
use std::process::Command;

fn arrowcat() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arrowcat"))
}

fn demo_fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/demo.jsonl")
}

#[test]
fn list_enumerates_the_registry() {
    let out = arrowcat().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 15);
    assert!(text.contains("arrow-core"));
    assert!(text.contains("hopf"));
    assert!(text.contains("Def. 1.1"));
}

#[test]
fn run_exits_zero_on_pass_and_reports_json() {
    let out = arrowcat()
        .args(["run", "arrow-core", "--samples", "5", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    let summary: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["status"], "pass");
    // Every preceding line is a valid JSON check record.
    for line in text.lines().take(text.lines().count() - 1) {
        let check: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(check["record"], "check");
    }
}

#[test]
fn unknown_suite_exits_two() {
    let out = arrowcat().args(["run", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown suite"));
}

#[test]
fn zero_max_dim_is_a_usage_error() {
    let out = arrowcat()
        .args(["run", "arrow-core", "--max-dim", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--max-dim"));
}

#[test]
fn env_seed_is_used_and_flag_wins() {
    let with_env = arrowcat()
        .args(["run", "arrow-core", "--samples", "3", "--format", "json"])
        .env("ARROWCAT_SEED", "99")
        .output()
        .unwrap();
    let text = String::from_utf8(with_env.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains("\"seed\":99"));

    let with_flag = arrowcat()
        .args([
            "run",
            "arrow-core",
            "--samples",
            "3",
            "--seed",
            "7",
            "--format",
            "json",
        ])
        .env("ARROWCAT_SEED", "99")
        .output()
        .unwrap();
    let text = String::from_utf8(with_flag.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains("\"seed\":7"));
}

#[test]
fn failing_checks_carry_law_edge_and_witnesses() {
    let out = arrowcat()
        .args([
            "run",
            "monoidal-coherence",
            "--samples",
            "1",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();

    // The corrupted associator is caught already at edge construction: the
    // fake component does not even form a commuting square.
    let by_id = |id: &str| {
        let line = text
            .lines()
            .find(|l| l.contains(id))
            .unwrap_or_else(|| panic!("{id} record present"));
        serde_json::from_str::<serde_json::Value>(line).unwrap()
    };
    let assoc = by_id("zz-negative-corrupted-associator");
    assert_eq!(assoc["verdict"], "fail");
    assert_eq!(assoc["ok"], true);
    assert_eq!(assoc["law"], "pentagon");
    assert!(assoc["edge"].as_str().unwrap().contains("alpha"));

    // The scaled unitor keeps every square commuting (scalars are central),
    // so the failure is a genuine path difference with both witnesses.
    let unitor = by_id("zz-negative-corrupted-unitor");
    assert_eq!(unitor["verdict"], "fail");
    assert_eq!(unitor["ok"], true);
    assert_eq!(unitor["law"], "triangle");
    assert_eq!(unitor["edge"], "unitor paths");
    assert!(unitor["left"].as_str().unwrap().starts_with("(top"));
    assert!(unitor["right"].as_str().unwrap().starts_with("(top"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let run_once = || {
        let out = arrowcat()
            .args([
                "run",
                "duality",
                "--samples",
                "10",
                "--seed",
                "3",
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run_once(), run_once());
}

#[test]
fn check_file_accepts_the_demo_fixtures() {
    let out = arrowcat()
        .args(["check-file".as_ref(), demo_fixtures().as_os_str()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2 matrices"));
    assert!(text.contains("1 groups"));
    assert!(text.contains("2 algebras"));
    assert!(text.contains("1 functors"));
}

#[test]
fn check_file_rejects_bad_input_with_exit_two() {
    let dir = std::env::temp_dir().join("arrowcat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.jsonl");
    std::fs::write(&path, r#"{"kind":"matrix","name":"M","rows":[["1/0"]]}"#).unwrap();
    let out = arrowcat()
        .args(["check-file".as_ref(), path.as_os_str()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"));
}

#[test]
fn run_with_fixtures_includes_fixture_records() {
    let out = arrowcat()
        .args([
            "run".as_ref(),
            "arrow-core".as_ref(),
            "--samples".as_ref(),
            "3".as_ref(),
            "--fixtures".as_ref(),
            demo_fixtures().as_os_str(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fixture-shear"));
    assert!(text.contains("fixture-rect"));

    // A fixture functor joins the functor-lift suite.
    let out = arrowcat()
        .args([
            "run".as_ref(),
            "functor-lift".as_ref(),
            "--samples".as_ref(),
            "5".as_ref(),
            "--fixtures".as_ref(),
            demo_fixtures().as_os_str(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("lift-fixture-T"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join("arrowcat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.jsonl");
    let _ = std::fs::remove_file(&path);
    let out = arrowcat()
        .args([
            "run".as_ref(),
            "pivot-ribbon".as_ref(),
            "--samples".as_ref(),
            "3".as_ref(),
            "--format".as_ref(),
            "json".as_ref(),
            "--out".as_ref(),
            path.as_os_str(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().last().unwrap().contains("\"status\":\"pass\""));
}
