//! JSON interchange for operators:
//! `{"symbols": [[[re, im], ...], ...], "conjugation": {"a": [re, im], "b": ..., "c": ...}}`.
//!
//! Components are JSON numbers or exact rational strings `"p/q"`; integers
//! and rational strings load as exact values.

use serde_json::{json, Map, Value};

use crate::conjugation::{ConjugationParams, DEFAULT_VALIDATION_TOL};
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(Scalar::to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let arr = v.as_array().ok_or_else(|| Error::Format("symbol must be an array of coefficients".into()))?;
    Ok(Poly::new(arr.iter().map(Scalar::from_json).collect::<Result<_>>()?))
}

/// The zero operator serializes as a single empty symbol.
pub fn diffop_to_json(op: &DiffOp) -> Value {
    let symbols: Vec<Value> = if op.is_zero() {
        vec![Value::Array(Vec::new())]
    } else {
        op.symbols().iter().map(poly_to_json).collect()
    };
    json!({ "symbols": symbols })
}

pub fn symbols_from_json(v: &Value) -> Result<DiffOp> {
    let arr = v.as_array().ok_or_else(|| Error::Format("\"symbols\" must be an array".into()))?;
    if arr.is_empty() {
        return Err(Error::Format("\"symbols\" must be nonempty".into()));
    }
    Ok(DiffOp::new(arr.iter().map(poly_from_json).collect::<Result<_>>()?))
}

/// Reads the `"symbols"` field of an operator document.
pub fn diffop_from_json(doc: &Value) -> Result<DiffOp> {
    let obj = doc.as_object().ok_or_else(|| Error::Format("operator document must be a JSON object".into()))?;
    symbols_from_json(obj.get("symbols").ok_or_else(|| Error::Format("missing \"symbols\"".into()))?)
}

pub fn conjugation_to_json(p: &ConjugationParams) -> Value {
    json!({ "a": p.a().to_json(), "b": p.b().to_json(), "c": p.c().to_json() })
}

pub fn conjugation_from_json(v: &Value, tol: Option<f64>) -> Result<ConjugationParams> {
    let obj = v.as_object().ok_or_else(|| Error::Format("\"conjugation\" must be an object".into()))?;
    let field = |k: &str| -> Result<Scalar> {
        Scalar::from_json(obj.get(k).ok_or_else(|| Error::Format(format!("conjugation missing \"{k}\"")))?)
    };
    ConjugationParams::with_tolerance(field("a")?, field("b")?, field("c")?, tol.unwrap_or(DEFAULT_VALIDATION_TOL))
}

/// An operator document with optional conjugation.
pub fn document(op: &DiffOp, conjugation: Option<&ConjugationParams>) -> Value {
    let mut obj = Map::new();
    obj.insert("symbols".into(), diffop_to_json(op)["symbols"].clone());
    if let Some(c) = conjugation {
        obj.insert("conjugation".into(), conjugation_to_json(c));
    }
    Value::Object(obj)
}
