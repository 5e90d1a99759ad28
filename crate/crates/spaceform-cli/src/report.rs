//! Machine-readable verification reports.
//!
//! Every command produces a [`Report`]: the echoed command line, the tool
//! version, one record per check, and an overall verdict. Reports serialize
//! to JSON with a fixed field order and no timestamps, so identical
//! invocations produce byte-identical output.

use serde::Serialize;

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named check with its outcome and a human-readable detail line.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub details: String,
}

/// A full verification report for one command invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// The subcommand and arguments, echoed canonically.
    pub command: String,
    /// Tool version.
    pub version: String,
    /// Every check that ran (or was skipped), in execution order.
    pub checks: Vec<CheckRecord>,
    /// `pass` exactly when no check failed.
    pub overall: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    /// Records a pass/fail check.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, status, details);
    }

    /// Records a check that compares a computed value against an expected one,
    /// rendering both into the detail line.
    pub fn compare<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        got: &T,
        want: &T,
    ) {
        let ok = got == want;
        let details = if ok {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {want:?}")
        };
        self.check(name, ok, details);
    }

    /// Records a skipped check.
    pub fn skip(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.push(name, Status::Skipped, details);
    }

    fn push(&mut self, name: impl Into<String>, status: Status, details: impl Into<String>) {
        if status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(CheckRecord { name: name.into(), status, details: details.into() });
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering: one aligned line per check, then the verdict.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag}  {} — {}\n", c.name, c.details));
        }
        let verdict = match self.overall {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "pass",
        };
        out.push_str(&format!(
            "overall: {verdict} ({} checks, {} failed)\n",
            self.checks.len(),
            self.checks.iter().filter(|c| c.status == Status::Fail).count()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_fails_exactly_when_some_check_fails() {
        let mut r = Report::new("demo");
        r.check("first", true, "fine");
        assert!(r.passed());
        r.skip("second", "not requested");
        assert!(r.passed());
        r.check("third", false, "broken");
        assert!(!r.passed());
    }

    #[test]
    fn json_has_stable_field_order_and_lowercase_statuses() {
        let mut r = Report::new("demo --flag");
        r.check("alpha", true, "ok");
        r.skip("beta", "later");
        let json = r.to_json();
        let cmd_pos = json.find("\"command\"").unwrap();
        let ver_pos = json.find("\"version\"").unwrap();
        let checks_pos = json.find("\"checks\"").unwrap();
        let overall_pos = json.find("\"overall\"").unwrap();
        assert!(cmd_pos < ver_pos && ver_pos < checks_pos && checks_pos < overall_pos);
        assert!(json.contains("\"pass\""));
        assert!(json.contains("\"skipped\""));
        assert!(!json.contains("\"Pass\""));
    }

    #[test]
    fn compare_renders_both_sides_on_mismatch() {
        let mut r = Report::new("demo");
        r.compare("counts", &vec![1, 2], &vec![1, 3]);
        assert!(!r.passed());
        assert!(r.checks[0].details.contains("got [1, 2], expected [1, 3]"));
    }
}
