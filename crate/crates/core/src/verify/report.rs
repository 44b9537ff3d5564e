//! Per-instance check results and their aggregation into a report.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// One checked instance: what was compared, for which parameters, and how it came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Results of one suite. Merging is associative, so partial reports from
/// independent workers can be combined in any grouping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub results: Vec<CheckResult>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    suite: &'a str,
    #[serde(flatten)]
    result: &'a CheckResult,
}

#[derive(Serialize)]
struct JsonSummary<'a> {
    suite: &'a str,
    summary: bool,
    checks: usize,
    passed: usize,
    failed: usize,
    wall_ms: u128,
    pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), results: Vec::new(), elapsed: Duration::ZERO }
    }

    /// Records a comparison; it passes iff the rendered values are equal.
    pub fn compare(
        &mut self,
        check: impl Into<String>,
        params: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.results.push(CheckResult { check: check.into(), params: params.into(), expected, actual, pass });
        pass
    }

    /// Records a comparison whose outcome is decided by the caller.
    pub fn record(
        &mut self,
        check: impl Into<String>,
        params: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.results.push(CheckResult {
            check: check.into(),
            params: params.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    /// Appends every result of `other` and adds its wall time.
    pub fn merge(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
        self.elapsed += other.elapsed;
    }

    pub fn checks(&self) -> usize {
        self.results.len()
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks() - self.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    /// True iff no instance failed (and at least one was checked).
    pub fn all_pass(&self) -> bool {
        !self.results.is_empty() && self.failed() == 0
    }

    /// One-line summary, e.g. `suite tables: 52 checks, 52 passed, 0 failed (3 ms)`.
    pub fn summary(&self) -> String {
        format!(
            "suite {}: {} checks, {} passed, {} failed ({} ms)",
            self.suite,
            self.checks(),
            self.passed(),
            self.failed(),
            self.elapsed.as_millis()
        )
    }

    /// One JSON object per instance followed by a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for result in &self.results {
            let record = JsonRecord { suite: &self.suite, result };
            out.push_str(&serde_json::to_string(&record).expect("plain data serializes"));
            out.push('\n');
        }
        let summary = JsonSummary {
            suite: &self.suite,
            summary: true,
            checks: self.checks(),
            passed: self.passed(),
            failed: self.failed(),
            wall_ms: self.elapsed.as_millis(),
            pass: self.all_pass(),
        };
        out.push_str(&serde_json::to_string(&summary).expect("plain data serializes"));
        out.push('\n');
        out
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}]", self.check, self.params)?;
        if self.pass {
            write!(f, " = {}", self.actual)
        } else {
            write!(f, " expected {} got {}", self.expected, self.actual)
        }
    }
}

impl fmt::Display for VerificationReport {
    /// Every instance on its own line, then the summary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        write!(f, "{}", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregation() {
        let mut a = VerificationReport::new("demo");
        assert!(!a.all_pass());
        assert!(a.compare("x", "n=1", 3, 3));
        let mut b = VerificationReport::new("demo");
        assert!(!b.compare("y", "n=2", "4", "5"));
        a.merge(b);
        assert_eq!((a.checks(), a.passed(), a.failed()), (2, 1, 1));
        assert!(!a.all_pass());
        assert_eq!(a.failures().next().unwrap().check, "y");
        let text = a.to_string();
        assert!(text.contains("PASS x [n=1] = 3"));
        assert!(text.contains("FAIL y [n=2] expected 4 got 5"));
    }

    #[test]
    fn json_lines() {
        let mut r = VerificationReport::new("demo");
        r.compare("x", "n=1", 3, 3);
        let lines: Vec<serde_json::Value> =
            r.to_json_lines().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["suite"], "demo");
        assert_eq!(lines[0]["check"], "x");
        assert_eq!(lines[0]["pass"], true);
        assert_eq!(lines[1]["summary"], true);
        assert_eq!(lines[1]["checks"], 1);
    }
}
