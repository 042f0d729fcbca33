//! Batch run reports in JSON and markdown.

use std::fmt::Write;

use serde::Serialize;
use twothree_core::ClaimReport;

use crate::claims::{Claim, Feasibility, RunOptions};

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub feasibility: Feasibility,
    pub modules: Vec<String>,
    pub report: ClaimReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub environment: RunOptions,
    pub passed: bool,
    pub claims: Vec<ClaimResult>,
}

impl RunReport {
    pub fn new(environment: RunOptions) -> RunReport {
        RunReport { environment, passed: true, claims: Vec::new() }
    }

    pub fn push(&mut self, claim: &Claim, report: ClaimReport) {
        self.passed &= report.passed;
        self.claims.push(ClaimResult {
            id: claim.id.clone(),
            description: claim.description.clone(),
            feasibility: claim.feasibility,
            modules: claim.modules.iter().map(|m| m.to_string()).collect(),
            report,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let e = &self.environment;
        let mut s = String::from("# Verification report\n\n");
        let _ = writeln!(s, "seed {}, cap {}, threads {}, slow {}\n", e.seed, e.cap, e.threads, e.slow);
        s.push_str("| claim | kind | result | checks | time (ms) |\n|---|---|---|---|---|\n");
        for c in &self.claims {
            let r = &c.report;
            let ok = r.checks.iter().filter(|k| k.passed).count();
            let _ = writeln!(
                s,
                "| {} | {} | {} | {}/{} | {:.0} |",
                c.id,
                kind(c.feasibility),
                if r.passed { "pass" } else { "FAIL" },
                ok,
                r.checks.len(),
                r.elapsed_ms
            );
        }
        for c in self.claims.iter().filter(|c| !c.report.passed) {
            let _ = writeln!(s, "\n## {}\n", c.id);
            for k in c.report.failed_checks() {
                let _ = writeln!(s, "- {}: {}", k.name, k.detail);
            }
        }
        s
    }
}

fn kind(f: Feasibility) -> &'static str {
    match f {
        Feasibility::Exact => "exact",
        Feasibility::ExhaustiveScan => "exhaustive-scan",
        Feasibility::PartialCertificate => "partial-certificate",
    }
}
