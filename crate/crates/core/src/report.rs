//! Check reports: `{"check": name, "pass": bool, "max_residual": float, "details": [...]}`.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub max_residual: f64,
    pub details: Vec<Value>,
    /// Index into `details` of the first failing record.
    #[serde(skip)]
    pub first_failure: Option<usize>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport { check: check.into(), pass: true, max_residual: 0.0, details: Vec::new(), first_failure: None }
    }

    /// Folds one residual into the report against `tol`.
    pub fn record(&mut self, residual: f64, tol: f64, detail: Value) {
        if residual.is_nan() || residual > tol {
            self.mark_failure();
        }
        if residual.is_nan() || residual > self.max_residual {
            self.max_residual = residual;
        }
        self.details.push(detail);
    }

    pub fn fail(&mut self, detail: Value) {
        self.mark_failure();
        self.details.push(detail);
    }

    fn mark_failure(&mut self) {
        self.pass = false;
        self.first_failure.get_or_insert(self.details.len());
    }

    /// The detail of the first failing record.
    pub fn counterexample(&self) -> Option<&Value> {
        self.first_failure.and_then(|i| self.details.get(i))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
