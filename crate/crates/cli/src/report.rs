use std::fmt::{self, Display};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(scenario: &str) -> Self {
        Self {
            scenario: scenario.to_string(),
            status: Status::Info,
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// Passes when the rendered values agree.
    pub fn expect(
        &mut self,
        label: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
    ) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        self.record(label, expected, actual, ok);
    }

    pub fn record(
        &mut self,
        label: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
        ok: bool,
    ) {
        self.checks.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            ok,
        });
    }

    /// `ok` out of `total` samples, expected to be all of them.
    pub fn tally(&mut self, label: impl Into<String>, ok: usize, total: usize) {
        self.expect(label, format!("{total}/{total}"), format!("{ok}/{total}"));
    }

    pub fn finish(mut self) -> Self {
        self.status = if self.checks.is_empty() {
            Status::Info
        } else if self.checks.iter().all(|c| c.ok) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}: {}\n", self.scenario, self.status);
        for c in &self.checks {
            let mark = if c.ok { "ok  " } else { "FAIL" };
            if c.ok {
                out.push_str(&format!("  [{mark}] {}: {}\n", c.label, c.actual));
            } else {
                out.push_str(&format!(
                    "  [{mark}] {}: expected {}, got {}\n",
                    c.label, c.expected, c.actual
                ));
            }
        }
        if self.elapsed_ms > 0 {
            out.push_str(&format!("  ({} ms)\n", self.elapsed_ms));
        }
        out
    }
}
