//! The command-line binary: output and exit codes.

use std::process::{Command, Output};

use gtverify::report::from_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtverify")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_reports_holds_and_fails() {
    let base = ["check", "--group", "builtin:sym4", "--subgroup", "(1,2,3,4)", "--property"];
    let o = run(&[&base[..], &["partial-pi"]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("FAILS"), "{}", stdout(&o));
    let o = run(&[&base[..], &["partial-l-pi"]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("HOLDS"));
}

#[test]
fn check_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    let o = run(&[
        "check", "--group", "builtin:a4", "--subgroup", "(1,2)(3,4)", "--property", "partial-pi", "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["property"], "partial-pi");
    assert!(v["holds"].is_boolean());
}

#[test]
fn verify_theorem_c() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(&["verify", "--group", "builtin:sym4", "--theorem", "C", "--p", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("VERIFIED") && stdout(&o).contains("type=3"));
    let reports = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].check, "theorem-C");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--group", "builtin:sym4", "--theorem", "Z"][..],
        &["verify", "--group", "builtin:nope", "--theorem", "A"],
        &["verify", "--group", "builtin:sym4", "--theorem", "A", "--p", "4"],
        &["check", "--group", "builtin:sym4", "--subgroup", "(1,9)", "--property", "partial-pi"],
        &["suite", "--checks", "no-such-check", "--theorems", "none"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exported_corpus_runs_through_suite() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["corpus", "export", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("sym4.grp").exists());
    let o = run(&[
        "suite", "--corpus", dir.path().to_str().unwrap(), "--theorems", "C", "--checks", "lemma-passing,harness-self-test",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("no counterexamples"));
}
