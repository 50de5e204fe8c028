//! Check results, run reports, and their text and JSON renderings.

use crate::bounds::Bounds;
use crate::registry::Suite;
use crate::VerifyError;
use serde::{Deserialize, Serialize};
use simpforge_core::Counterexample;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub suite: Suite,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub bounds: Bounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    pub started_at: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(bounds: Bounds, mutation: Option<String>, started_at: String, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { version: REPORT_VERSION.into(), bounds, mutation, started_at, checks, summary }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// The same report with the timing fields cleared.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        r.started_at.clear();
        r.checks.iter_mut().for_each(|c| c.millis = 0);
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Report, VerifyError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Grouped by suite in registry order, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "simpforge verify report v{} ({})", self.version, self.bounds);
        if let Some(m) = &self.mutation {
            let _ = writeln!(out, "mutation: {m}");
        }
        for suite in Suite::ORDER {
            let rows: Vec<_> = self.checks.iter().filter(|c| c.suite == suite).collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n[{suite}]");
            for c in rows {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let _ = writeln!(out, "{tag} {} ({} ms)", c.id, c.millis);
                if let Some(x) = &c.counterexample {
                    let _ = writeln!(out, "     at level {} [{}] on {}", x.level, x.index, x.generator);
                    let _ = writeln!(out, "     lhs: {}", x.lhs);
                    let _ = writeln!(out, "     rhs: {}", x.rhs);
                }
            }
        }
        let s = self.summary;
        let _ = writeln!(out, "\nsummary: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    /// Write to `path`, or standard output when `path` is `None`.
    pub fn emit(&self, format: Format, path: Option<&Path>) -> Result<(), VerifyError> {
        let text = self.render(format);
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| VerifyError::Io(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}
