use super::*;
use crate::report::{Check, RunConfig, SuiteReport};

fn quick_config() -> RunConfig {
    RunConfig {
        suites: vec![Suite::Cyclo, Suite::Perm, Suite::Macwilliams],
        seed: 7,
        precision: 50,
        skip_heavy: true,
    }
}

#[test]
fn run_rejects_empty_suite_list() {
    let cfg = RunConfig { suites: vec![], ..RunConfig::default() };
    assert_eq!(run(&cfg), Err(HarnessError::EmptySuiteList));
}

#[test]
fn quick_suites_all_pass() {
    let report = run(&quick_config()).unwrap();
    assert!(report.ids_unique());
    assert!(!report.has_failures(), "{}", report.to_text());
    assert_eq!(report.suites.len(), 3);
    // canonical order regardless of request order
    let names: Vec<&str> = report.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(names, vec!["cyclo", "perm", "macwilliams"]);
}

#[test]
fn same_seed_means_byte_identical_reports() {
    let a = run(&quick_config()).unwrap();
    let b = run(&quick_config()).unwrap();
    assert_eq!(a.to_json(false), b.to_json(false));
}

#[test]
fn skip_heavy_marks_closure_checks_skipped() {
    let cfg = RunConfig {
        suites: vec![Suite::Group],
        seed: 0,
        precision: 50,
        skip_heavy: true,
    };
    let report = run(&cfg).unwrap();
    assert!(report.count(Status::Skipped) >= 5);
    assert!(!report.has_failures(), "{}", report.to_text());
}

#[test]
fn emit_formats() {
    let report = run(&quick_config()).unwrap();
    let text = emit(&report, EmitFormat::Text);
    assert!(text.contains("suite cyclo"));
    let json = emit(&report, EmitFormat::Structured);
    let parsed = VerificationReport::from_json(&json).unwrap();
    assert_eq!(parsed, {
        let mut r = report.clone();
        r.normalize();
        r
    });
    assert_eq!(exit_code(&report), 0);
}

#[test]
fn failing_checks_carry_their_claims_into_the_emitted_report() {
    // An intentionally broken comparison must surface as a failing check
    // whose claim and witness appear verbatim in both output formats.
    use crate::matrep::{compare_matrices, TableComparison};
    let cat = crate::matrep::catalog::Catalog::new();
    let mut tampered = cat.t.clone();
    tampered = tampered.mul(&cat.t); // wrong power, differs from T
    let comparison = compare_matrices(&tampered, &cat.t);
    let TableComparison::Differs { positions } = comparison else {
        panic!("tampered matrix should differ");
    };
    let check = Check {
        id: "group.99-tampered-entry".into(),
        claim: "the tampered diagonal matches the printed generator table".into(),
        status: Status::Fail,
        witness: Some(format!("differs at {positions:?}")),
        elapsed_us: 1,
    };
    let report = VerificationReport {
        suites: vec![SuiteReport { suite: "group".into(), checks: vec![check] }],
    };
    assert_eq!(exit_code(&report), 1);
    let text = emit(&report, EmitFormat::Text);
    assert!(text.contains("the tampered diagonal matches the printed generator table"));
    assert!(text.contains("differs at"));
    let json = emit(&report, EmitFormat::Structured);
    assert!(json.contains("the tampered diagonal matches the printed generator table"));
    assert!(json.contains("differs at"));
}

#[test]
fn dump_known_objects() {
    let t = dump("T").unwrap();
    assert!(t.starts_with("6\n"));
    assert_eq!(t.lines().count(), 7);
    let a0 = dump("A0").unwrap();
    assert_eq!(a0.lines().count(), 3);
    let c = dump("sqrt13").unwrap();
    assert!(c.starts_with("13;"));
    assert!(dump("nonsense").is_err());
    for name in dump_names() {
        assert!(dump(&name).is_ok(), "dump {name} failed");
    }
}
