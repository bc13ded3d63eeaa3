//! Golden-file tests: the demo fixture file must keep parsing, and a pinned
//! report must stay byte-identical. Regenerate with UPDATE_GOLDENS=1 after
//! an intentional format change.

use arrowcat_cli::suites::{run_suite, SuiteParams};
use arrowcat_cli::{load_instances, SuiteReport};
use std::path::PathBuf;

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn golden_report() -> SuiteReport {
    let fixtures = load_instances(&manifest_path("fixtures/demo.jsonl")).unwrap();
    run_suite("arrow-core", &SuiteParams::new(42, 3, 2), &fixtures).unwrap()
}

#[test]
fn demo_fixture_file_parses_and_validates() {
    let set = load_instances(&manifest_path("fixtures/demo.jsonl")).unwrap();
    assert_eq!(set.matrices.len(), 2);
    assert_eq!(set.groups.len(), 1);
    assert_eq!(set.algebras.len(), 2);
    assert_eq!(set.functors.len(), 1);
    assert_eq!(set.groups["K4"].order(), 4);
    assert!(set.groups["K4"].is_abelian());
}

#[test]
fn golden_report_bytes_are_stable() {
    let rendered = golden_report().to_json_lines();
    let path = manifest_path("goldens/arrow-core-demo.jsonl");
    if std::env::var("UPDATE_GOLDENS").is_ok() {
        std::fs::write(&path, &rendered).unwrap();
    }
    let golden = std::fs::read_to_string(&path)
        .expect("golden missing; regenerate with UPDATE_GOLDENS=1");
    assert_eq!(
        rendered, golden,
        "report bytes drifted from {path:?}; regenerate with UPDATE_GOLDENS=1 if intentional"
    );
}

#[test]
fn golden_report_regeneration_is_deterministic() {
    assert_eq!(golden_report().to_json_lines(), golden_report().to_json_lines());
}
