//! Verification reports shared by the lemma checks, generation certificates
//! and the command-line claim registry.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One named sub-check inside a [`ClaimReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

/// Outcome of verifying one stated claim: the individual checks, any
/// witness or counterexample data, and wall-clock time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null", default)]
    pub data: Value,
    pub elapsed_ms: f64,
}

impl ClaimReport {
    pub fn new(claim: impl Into<String>) -> Self {
        ClaimReport {
            claim: claim.into(),
            passed: true,
            checks: Vec::new(),
            data: Value::Null,
            elapsed_ms: 0.0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn set_data(&mut self, key: &str, value: impl Serialize) {
        if !self.data.is_object() {
            self.data = Value::Object(Default::default());
        }
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.data.as_object_mut().expect("object").insert(key.to_string(), v);
    }

    /// Runs `body` against a fresh report and records the elapsed time.
    pub fn timed(claim: impl Into<String>, body: impl FnOnce(&mut ClaimReport)) -> ClaimReport {
        let start = Instant::now();
        let mut report = ClaimReport::new(claim);
        body(&mut report);
        report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
