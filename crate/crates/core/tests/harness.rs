use std::sync::Arc;

use jordan_core::dsl::Tables;
use jordan_core::lie::{check_table, BracketTable, CheckStatus, TwistTable};
use jordan_core::suites::{self, Options, Status};

const SHIPPED: &str = include_str!("../data/bracket_shipped.tbl");

/// The shipped table with every missing record set to zero.
fn zero_completed() -> Tables {
    let shipped = BracketTable::shipped();
    let mut src = SHIPPED.to_string();
    for lhs in shipped.missing_records() {
        src += &format!("\n{lhs} = 0");
    }
    let bracket = BracketTable::parse(&src).unwrap();
    assert!(bracket.is_complete());
    Tables {
        bracket,
        twist: TwistTable::shipped(),
    }
}

#[test]
fn reports_are_deterministic() {
    let t = Arc::new(Tables::shipped());
    for name in ["identities", "peirce", "l00"] {
        let a = suites::run(name, &t, &Options::default()).unwrap();
        let b = suites::run(name, &t, &Options::default()).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn json_report_shape() {
    let t = Arc::new(Tables::shipped());
    let r = suites::run("roots", &t, &Options::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["suite"], "roots");
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len(), 12);
    assert!(items.iter().all(|i| i["status"] == "pass"));
}

#[test]
fn tier2_suites_report_gaps_on_shipped_tables() {
    let t = Arc::new(Tables::shipped());
    for name in ["commutators", "weyl"] {
        let r = suites::run(name, &t, &Options::default()).unwrap();
        assert!(
            r.items.iter().any(|i| i.status == Status::TableIncomplete),
            "{name}"
        );
        assert!(r.items.iter().all(|i| i.status != Status::Error), "{name}");
        assert_eq!(r.exit_code(), 2, "{name}");
    }
}

#[test]
fn zero_completed_table_runs_end_to_end() {
    let t = Arc::new(zero_completed());
    for name in ["commutators", "weyl"] {
        let r = suites::run(name, &t, &Options::default()).unwrap();
        assert!(
            r.items.iter().all(|i| i.status != Status::TableIncomplete),
            "{name}"
        );
        assert!(r.items.iter().all(|i| i.status != Status::Error), "{name}");
    }
}

#[test]
fn zero_completed_table_fails_jacobi() {
    let t = zero_completed();
    let r = check_table(&t.bracket, &t.twist).unwrap();
    assert!(matches!(r.jacobi, CheckStatus::Fail(_)));
}

#[test]
fn shipped_table_is_consistent_where_defined() {
    let t = Tables::shipped();
    let r = check_table(&t.bracket, &t.twist).unwrap();
    assert!(!matches!(r.grading, CheckStatus::Fail(_)));
    assert!(!matches!(r.antisymmetry, CheckStatus::Fail(_)));
    assert!(!matches!(r.jacobi, CheckStatus::Fail(_)));
}
