use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub p: u32,
    pub n: usize,
    pub name: String,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub suite: String,
    /// Absent for the suite `all`, which covers several (p, n).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub seed: u64,
    pub sample: usize,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub(crate) fn finish(&mut self) {
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        self.summary =
            Summary { checks: self.checks.len(), passed, failed: self.checks.len() - passed };
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "grasslab {}  suite={}", self.version, self.suite);
        if let (Some(p), Some(n)) = (self.p, self.n) {
            let _ = write!(out, "  p={p}  n={n}");
        }
        let _ = writeln!(out, "  seed={}  sample={}", self.seed, self.sample);
        let width = self.checks.iter().map(|c| c.name.len() + c.suite.len()).max().unwrap_or(0) + 1;
        let _ = writeln!(out, "{:<6} {:<7} {:<width$} message", "status", "(p,n)", "check");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let name = format!("{}/{}", c.suite, c.name);
            let _ = write!(out, "{status:<6} {:<7} {name:<width$} {}", format!("({},{})", c.p, c.n), c.message);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, " [{ms} ms]");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.summary.checks, self.summary.passed, self.summary.failed
        );
        out
    }
}
