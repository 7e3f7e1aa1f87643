//! Acceptance gate: one test per criterion, each printing a pass/fail
//! line with the suite's worst case. Criterion 11 (the CLI binary's exit
//! code, runtime, and byte-identical reports) lives in the CLI crate's
//! integration tests.

use std::time::Instant;

use periodic_sums::suites::{run_suite, SuiteOptions, SuiteReport};

fn run(criterion: usize, suite: &str, budget_secs: Option<f64>) -> SuiteReport {
    let opts = SuiteOptions::default();
    let started = Instant::now();
    let report = run_suite(suite, &opts).expect("known suite");
    let elapsed = started.elapsed().as_secs_f64();
    let runtime_ok = budget_secs.is_none_or(|budget| elapsed < budget);
    let ok = report.passed && runtime_ok;
    println!(
        "criterion {criterion:2} {}: {} (cases={}, max_abs={:.3e}, max_scaled={:.3e}, tol={:.1e}, {:.3}s)",
        if ok { "PASS" } else { "FAIL" },
        report.name,
        report.cases,
        report.max_abs_err,
        report.max_rel_err,
        report.tolerance,
        elapsed,
    );
    assert!(
        report.passed,
        "criterion {criterion} ({suite}) failed; worst case: {} (max_abs={:.3e}, max_scaled={:.3e})",
        report.worst_case, report.max_abs_err, report.max_rel_err
    );
    if let Some(budget) = budget_secs {
        assert!(
            elapsed < budget,
            "criterion {criterion} ({suite}) took {elapsed:.3}s, budget {budget}s"
        );
    }
    report
}

#[test]
fn criterion_01_forward_difference_identities() {
    run(1, "delta", Some(1.0));
}

#[test]
fn criterion_02_index_conversions_exact() {
    let report = run(2, "fact1", Some(1.0));
    assert_eq!(
        report.max_abs_err, 0.0,
        "rational conversions must be exact"
    );
}

#[test]
fn criterion_03_extension_formula_oracle() {
    run(3, "extension", Some(5.0));
}

#[test]
fn criterion_04_closed_forms() {
    run(4, "closed-forms", None);
}

#[test]
fn criterion_05_generating_function_routes() {
    run(5, "genfun", None);
}

#[test]
fn criterion_06_extension_conditions() {
    run(6, "prop34", None);
}

#[test]
fn criterion_07_catalan_constant() {
    run(7, "catalan", Some(1.0));
}

#[test]
fn criterion_08_binomial_progressions() {
    run(8, "binomial", None);
}

#[test]
fn criterion_09_gauss_formula_sweep() {
    run(9, "gauss", None);
}

#[test]
fn criterion_10_parser_weights() {
    run(10, "parser", None);
}
