use std::path::PathBuf;
use std::process::{Command, Output};

fn jordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn shipped_table() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/bracket_shipped.tbl")
}

#[test]
fn eval_prints_result() {
    let o = jordan(&["eval", "conj(a1*a2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1)*(a2'*a1')");
}

#[test]
fn simplify_cancels_conjugate_pair() {
    let o = jordan(&["simplify", "a1*a2+a1*conj(a2)-tr(a2)*a1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0_C");
}

#[test]
fn eval_syntax_error_exits_one() {
    let o = jordan(&["eval", "a1 +"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));
}

#[test]
fn eval_missing_entry_exits_two() {
    let o = jordan(&["eval", "bracket(xi, zeta)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing bracket-table entry"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(jordan(&["suite", "nope"]).status.code(), Some(3));
    assert_eq!(jordan(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(jordan(&["eval", "1", "--m3", "1"]).status.code(), Some(3));
}

#[test]
fn help_exits_zero() {
    assert_eq!(jordan(&["--help"]).status.code(), Some(0));
}

#[test]
fn identities_suite_passes() {
    let o = jordan(&["suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("18 items, 18 pass"));
}

#[test]
fn suite_output_is_byte_stable() {
    let a = jordan(&["suite", "peirce", "--format", "json"]);
    let b = jordan(&["suite", "peirce", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("{\n  \"suite\": \"peirce\""));
}

#[test]
fn commutators_are_table_incomplete() {
    let o = jordan(&["suite", "commutators"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("table-incomplete"));
}

#[test]
fn check_table_on_shipped_table() {
    let o = jordan(&["check-table", shipped_table().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let s = stdout(&o);
    assert!(s.contains("grading       pass"));
    assert!(s.contains("75 unordered pairs missing"));
}

#[test]
fn check_table_template_lists_missing_records() {
    let o = jordan(&["check-table", "--template", shipped_table().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("# [")));
}

#[test]
fn check_table_reports_parse_failure() {
    let dir = std::env::temp_dir().join(format!("jordan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.tbl");
    std::fs::write(&f, "[X(p), Y(q)] = \n").unwrap();
    let o = jordan(&["check-table", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("parse         fail"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn roots_lists_both_systems() {
    let o = jordan(&["roots"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| !l.starts_with('#')).count(), 48 + 12);
}
