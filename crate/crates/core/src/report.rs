//! Check outcomes and the report document emitted by the CLI.
//!
//! The machine-readable rendering is a versioned line format and is
//! deterministic for a fixed input and bounds: it carries no timing fields,
//! so two runs produce byte-identical documents. Wall times appear in the
//! text rendering only.

use std::fmt::Write as _;

use crate::bounds::TruncationBounds;
use crate::REPORT_SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

/// Result of one named check: pass/fail, the region actually verified, the
/// number of cases swept, and the first counterexample when failing.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub cases: u64,
    pub region: String,
    pub witness: Option<String>,
    /// Extra result lines (homology dimension tables and the like).
    pub details: Vec<String>,
    /// Non-fatal conditions, e.g. truncation cutting a region short.
    pub warnings: Vec<String>,
}

impl CheckOutcome {
    pub fn pass(name: &'static str, cases: u64, region: String) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Pass,
            cases,
            region,
            witness: None,
            details: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn fail(name: &'static str, cases: u64, region: String, witness: String) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Fail,
            cases,
            region,
            witness: Some(witness),
            details: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// A list of named axiom/identity outcomes with an aggregate verdict.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn verdict(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn failed_names(&self) -> Vec<&'static str> {
        self.outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.name)
            .collect()
    }
}

/// The full document for one CLI run.
#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_name: String,
    pub digest: String,
    pub bounds: TruncationBounds,
    pub outcomes: Vec<CheckOutcome>,
    /// Wall time per check in milliseconds, parallel to `outcomes`.
    pub times_ms: Vec<u128>,
}

impl ReportDocument {
    pub fn verdict(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    fn quote(s: &str) -> String {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }

    /// Line-delimited machine format, schema-versioned, timing-free.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{REPORT_SCHEMA}");
        let _ = writeln!(out, "tool {} {}", self.tool, self.version);
        let _ = writeln!(out, "input {} sha256={}", self.input_name, self.digest);
        let _ = writeln!(
            out,
            "bounds max_degree={} max_length={}",
            self.bounds.max_degree, self.bounds.max_length
        );
        for o in &self.outcomes {
            let _ = writeln!(
                out,
                "check {} {} cases={} region={} witness={}",
                o.name,
                o.status.as_str(),
                o.cases,
                Self::quote(&o.region),
                o.witness
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |w| Self::quote(w)),
            );
            for d in &o.details {
                let _ = writeln!(out, "detail {} {}", o.name, Self::quote(d));
            }
            for w in &o.warnings {
                let _ = writeln!(out, "warn {} {}", o.name, Self::quote(w));
            }
        }
        let _ = writeln!(
            out,
            "verdict {}",
            if self.verdict() { "pass" } else { "fail" }
        );
        out
    }

    /// Human-oriented rendering, including wall times.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} — input `{}` (sha256 {})",
            self.tool,
            self.version,
            self.input_name,
            &self.digest[..12.min(self.digest.len())]
        );
        let _ = writeln!(out, "bounds: {}", self.bounds);
        for (o, t) in self.outcomes.iter().zip(&self.times_ms) {
            let _ = writeln!(
                out,
                "  [{}] {:<24} {:>8} cases  ({} ms)  {}",
                if o.passed() { "pass" } else { "FAIL" },
                o.name,
                o.cases,
                t,
                o.region,
            );
            if let Some(w) = &o.witness {
                let _ = writeln!(out, "         counterexample: {w}");
            }
            for d in &o.details {
                let _ = writeln!(out, "         {d}");
            }
            for w in &o.warnings {
                let _ = writeln!(out, "         warning: {w}");
            }
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            if self.verdict() { "pass" } else { "FAIL" }
        );
        out
    }
}
