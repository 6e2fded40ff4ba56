//! Run reports. The JSON form is canonical; text is a rendering of it.

use std::collections::BTreeMap;
use std::time::Instant;

use fockcalc_core::CheckReport;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// One check within a run.
#[derive(Clone, Debug, Serialize)]
pub struct ResultEntry {
    pub suite: String,
    pub subject: String,
    pub check: String,
    pub pass: bool,
    /// The check did not apply to this subject; counts as a pass.
    pub skipped: bool,
    pub max_residual: f64,
    pub samples: usize,
    pub counterexample: Option<Value>,
    pub data: Option<Value>,
}

impl ResultEntry {
    pub fn from_check(suite: &str, subject: &str, report: &CheckReport) -> Self {
        let counterexample = report.counterexample().cloned();
        ResultEntry {
            suite: suite.into(),
            subject: subject.into(),
            check: report.check.clone(),
            pass: report.pass,
            skipped: false,
            max_residual: report.max_residual,
            samples: report.details.len(),
            counterexample,
            data: None,
        }
    }

    pub fn single(suite: &str, subject: &str, check: &str, residual: f64, tol: f64, data: Value) -> Self {
        let pass = residual <= tol;
        ResultEntry {
            suite: suite.into(),
            subject: subject.into(),
            check: check.into(),
            pass,
            skipped: false,
            max_residual: residual,
            samples: 1,
            counterexample: (!pass).then(|| data.clone()),
            data: Some(data),
        }
    }

    pub fn skipped(suite: &str, subject: &str, check: &str, reason: String) -> Self {
        ResultEntry {
            suite: suite.into(),
            subject: subject.into(),
            check: check.into(),
            pass: true,
            skipped: true,
            max_residual: 0.0,
            samples: 0,
            counterexample: None,
            data: Some(json!({ "reason": reason })),
        }
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = Some(data);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: bool,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub results: Vec<ResultEntry>,
    pub summary: Summary,
    pub residuals: BTreeMap<String, f64>,
    pub timing: Timing,
}

/// SHA-256 of the canonical JSON of the inputs. `serde_json` maps keep
/// their keys sorted, so equal inputs give equal digests.
pub fn digest(inputs: &Value) -> String {
    hex::encode(Sha256::digest(inputs.to_string().as_bytes()))
}

impl RunReport {
    pub fn new(command: &str, inputs: &Value, results: Vec<ResultEntry>, started: Instant) -> Self {
        let failed = results.iter().filter(|r| !r.pass).count();
        let skipped = results.iter().filter(|r| r.skipped).count();
        let mut residuals = BTreeMap::new();
        for r in results.iter().filter(|r| !r.skipped) {
            let key = format!("{}/{}/{}", r.suite, r.subject, r.check);
            let slot = residuals.entry(key).or_insert(0.0f64);
            *slot = slot.max(r.max_residual);
        }
        RunReport {
            command: command.into(),
            inputs_digest: digest(inputs),
            summary: Summary { pass: failed == 0, total: results.len(), passed: results.len() - failed, failed, skipped },
            results,
            residuals,
            timing: Timing { elapsed_ms: started.elapsed().as_secs_f64() * 1e3 },
        }
    }

    pub fn pass(&self) -> bool {
        self.summary.pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}  [{}]\n", self.command, &self.inputs_digest[..12]);
        for r in &self.results {
            let status = match (r.skipped, r.pass) {
                (true, _) => "SKIP",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            };
            out.push_str(&format!("{status}  {:<12} {:<22} {:<32} max residual {:.3e}\n", r.suite, r.subject, r.check, r.max_residual));
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("      counterexample: {c}\n"));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} skipped ({:.1} ms)\n",
            if s.pass { "PASS" } else { "FAIL" },
            s.passed - s.skipped,
            s.failed,
            s.skipped,
            self.timing.elapsed_ms
        ));
        out
    }
}
