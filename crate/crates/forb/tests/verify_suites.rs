//! Every named verification suite must pass end to end. One test per
//! suite so they run in parallel and a failure names its suite directly.

use forb::verify::run_suite;

fn assert_suite_passes(name: &str) {
    let report = run_suite(name).unwrap();
    assert!(!report.claims.is_empty(), "suite {name} ran no claims");
    for claim in &report.claims {
        assert!(
            claim.pass,
            "suite {name}, claim {}: {}",
            claim.id, claim.details
        );
    }
}

#[test]
fn lemma_ak_suite_passes() {
    assert_suite_passes("lemma-ak");
}

#[test]
fn thm_f1_suite_passes() {
    assert_suite_passes("thm-f1");
}

#[test]
fn main_thm_suite_passes() {
    assert_suite_passes("main-thm");
}

#[test]
fn code_construction_suite_passes() {
    assert_suite_passes("code-construction");
}

#[test]
fn f38_gap_suite_passes() {
    assert_suite_passes("f38-gap");
}

#[test]
fn hypothesis_suite_passes() {
    assert_suite_passes("hypothesis");
}

#[test]
fn minimal_matrices_suite_passes() {
    assert_suite_passes("minimal-matrices");
}
