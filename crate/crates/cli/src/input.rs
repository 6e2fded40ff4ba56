//! Operator files:
//! `{"symbols": ..., "conjugation": {...}, "truncation": N, "flags": {"c_selfadjoint": bool}}`,
//! or an L^2 operator `{"terms": [...]}`.

use std::io::Read;
use std::path::Path;

use fockcalc_core::interchange::{conjugation_from_json, diffop_from_json, document};
use fockcalc_core::sb::L2Op;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::registry::{self, Subject};

pub const DEFAULT_N: usize = 64;
pub const DEFAULT_N_ENV: &str = "FOCKCALC_DEFAULT_N";

#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub subject: Subject,
    pub truncation: Option<usize>,
    pub c_selfadjoint: Option<bool>,
    /// Canonical form of what was read, for the report digest.
    pub document: Value,
}

fn canonical(subject: &Subject) -> Value {
    match subject {
        Subject::Fock { op, conjugation } => document(op, conjugation.as_ref()),
        Subject::L2(l) => l.to_json(),
    }
}

pub fn parse_document(doc: &Value, name: &str, tol: Option<f64>) -> Result<Input, CliError> {
    let obj = doc.as_object().ok_or_else(|| CliError::malformed("operator file must be a JSON object"))?;
    let subject = match (obj.get("symbols"), obj.get("terms")) {
        (Some(_), None) => {
            let op = diffop_from_json(doc)?;
            let conjugation = obj.get("conjugation").map(|c| conjugation_from_json(c, tol)).transpose()?;
            Subject::Fock { op, conjugation }
        }
        (None, Some(_)) => Subject::L2(L2Op::from_json(doc)?),
        _ => return Err(CliError::malformed("operator file needs exactly one of \"symbols\" or \"terms\"")),
    };
    let truncation = match obj.get("truncation") {
        None => None,
        Some(v) => Some(v.as_u64().filter(|&n| n > 0).ok_or_else(|| CliError::malformed("\"truncation\" must be a positive integer"))?
            as usize),
    };
    let c_selfadjoint = match obj.get("flags").and_then(|f| f.get("c_selfadjoint")) {
        None => None,
        Some(v) => Some(v.as_bool().ok_or_else(|| CliError::malformed("flags.c_selfadjoint must be a boolean"))?),
    };
    let mut document = canonical(&subject);
    if let Some(n) = truncation {
        document["truncation"] = json!(n);
    }
    if let Some(flag) = c_selfadjoint {
        document["flags"] = json!({ "c_selfadjoint": flag });
    }
    Ok(Input { name: name.to_string(), subject, truncation, c_selfadjoint, document })
}

pub fn from_example(name: &str) -> Result<Input, CliError> {
    let e = registry::example(name).ok_or_else(|| {
        let known: Vec<_> = registry::examples().iter().map(|e| e.name).collect();
        CliError::malformed(format!("unknown example {name:?}; known: {}", known.join(", ")))
    })?;
    let mut document = canonical(&e.subject);
    document["example"] = json!(name);
    Ok(Input { name: name.to_string(), subject: e.subject, truncation: None, c_selfadjoint: None, document })
}

pub fn read_file(path: &Path, tol: Option<f64>) -> Result<Input, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::malformed(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::malformed(format!("reading {}: {e}", path.display())))?
    };
    let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::malformed(format!("{}: {e}", path.display())))?;
    parse_document(&doc, &path.display().to_string(), tol)
}

/// The operator file, else the named example, else `None`.
pub fn load(file: Option<&Path>, example: Option<&str>, tol: Option<f64>) -> Result<Option<Input>, CliError> {
    match (file, example) {
        (Some(_), Some(_)) => Err(CliError::malformed("give either an operator file or --example, not both")),
        (Some(p), None) => read_file(p, tol).map(Some),
        (None, Some(name)) => from_example(name).map(Some),
        (None, None) => Ok(None),
    }
}

/// `--n`, then the file's truncation, then `FOCKCALC_DEFAULT_N`, then 64.
pub fn truncation(flag: Option<usize>, input: Option<&Input>) -> Result<usize, CliError> {
    if let Some(n) = flag.or(input.and_then(|i| i.truncation)) {
        return Ok(n);
    }
    match std::env::var(DEFAULT_N_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::malformed(format!("{DEFAULT_N_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_N),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{EXIT_INVALID_CONJUGATION, EXIT_MALFORMED};
    use fockcalc_core::DiffOp;

    #[test]
    fn reads_flags_and_truncation() {
        let doc = json!({"symbols": [[1], [0, 2]], "truncation": 32, "flags": {"c_selfadjoint": true}});
        let input = parse_document(&doc, "h", None).unwrap();
        assert_eq!(input.subject, Subject::Fock { op: DiffOp::oscillator(), conjugation: None });
        assert_eq!((input.truncation, input.c_selfadjoint), (Some(32), Some(true)));
        assert_eq!(truncation(None, Some(&input)).unwrap(), 32);
        assert_eq!(truncation(Some(8), Some(&input)).unwrap(), 8);
    }

    #[test]
    fn rejects_bad_documents() {
        let code = |doc: Value| parse_document(&doc, "x", None).unwrap_err().code;
        assert_eq!(code(json!({"symbols": []})), EXIT_MALFORMED);
        assert_eq!(code(json!({"symbols": [[1]], "terms": []})), EXIT_MALFORMED);
        assert_eq!(code(json!({"symbols": [[1]], "truncation": -3})), EXIT_MALFORMED);
        assert_eq!(code(json!({"symbols": [[1]], "conjugation": {"a": [2, 0], "b": [0, 0], "c": [1, 0]}})), EXIT_INVALID_CONJUGATION);
        assert!(load(None, Some("no-such-example"), None).is_err());
    }

    #[test]
    fn reads_l2_operators() {
        let input = parse_document(&L2Op::oscillator().to_json(), "l2", None).unwrap();
        assert_eq!(input.subject, Subject::L2(L2Op::oscillator()));
    }
}
