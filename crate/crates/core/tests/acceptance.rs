//! Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
//! budget. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ramanujan_core::verify::{
    check_bijections, check_conjecture, check_genfun, check_identities, check_interpretations, check_plane,
    check_recurrences, reproduce_tables, VerificationReport,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let checks: usize = reports.iter().map(|r| r.checks()).sum();
    let failed: usize = reports.iter().map(|r| r.failed()).sum();
    let mut detail = format!("{checks} checks, {failed} failed");
    if let Some(f) = reports.iter().flat_map(|r| r.failures()).next() {
        detail.push_str(&format!("; first failure: {f}"));
    }
    Outcome { pass: reports.iter().all(|r| r.all_pass()), detail }
}

fn criterion(number: usize, title: &str, budget: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = outcome.pass && in_time;
    let timing = if in_time { "" } else { " (over budget)" };
    println!(
        "{} criterion {number}: {title} -- {} in {:.2?}{timing} (budget {:?})",
        if pass { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed,
        budget
    );
    pass
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "psi, Q and lambda tables reproduced cell-exact", secs(1), || from_reports(&[reproduce_tables()])),
        criterion(2, "all psi and Q recurrences agree for n, r <= 12", secs(5), || {
            from_reports(&[check_recurrences(12)])
        }),
        criterion(3, "f(n,k) matches tree counts for n <= 7, Q matches its tree sum for n <= 6", secs(120), || {
            from_reports(&[check_interpretations(7)])
        }),
        criterion(
            4,
            "generating function for r <= 4, x in -2..5, order 10, negative control rejected",
            secs(5),
            || from_reports(&[check_genfun(4)]),
        ),
        criterion(5, "figure sets and pairs reproduced", secs(5), || {
            let checks = common::figure_checks();
            let failed: Vec<_> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            Outcome {
                pass: failed.is_empty(),
                detail: format!("{} checks, {} failed {:?}", checks.len(), failed.len(), failed),
            }
        }),
        criterion(6, "bijections certified set-for-set for n <= 6", secs(60), || from_reports(&[check_bijections(6)])),
        criterion(6, "bijections certified set-for-set for n <= 7", secs(600), || from_reports(&[check_bijections(7)])),
        criterion(7, "counting identities for n <= 6", secs(60), || from_reports(&[check_identities(6)])),
        criterion(8, "lambda recurrence and special cases for n <= 7", secs(60), || {
            from_reports(&[check_conjecture(7)])
        }),
        criterion(8, "lambda recurrence and special cases for n <= 8", secs(900), || {
            from_reports(&[check_conjecture(8)])
        }),
        criterion(9, "all-improper trees and increasing plane trees in bijection for n <= 8", secs(300), || {
            from_reports(&[check_plane(8)])
        }),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criterion runs passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
