//! Normal-ordered operators `sum c_{m,q} x^m D^q` on `L^2(R)`, `D = d/dx`.

use std::fmt;

use serde_json::{json, Map, Value};

use super::surd::Surd;
use super::weyl::{add_term, normal_product, NormalForm};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct L2Op {
    terms: NormalForm,
}

impl L2Op {
    pub fn from_form(form: NormalForm) -> Self {
        let mut terms = NormalForm::new();
        for (k, c) in form {
            add_term(&mut terms, k, c);
        }
        L2Op { terms }
    }

    /// From `(x_power, d_power, coeff)` triples; repeated keys add up.
    pub fn new(terms: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut out = NormalForm::new();
        for (m, q, c) in terms {
            add_term(&mut out, (m, q), Surd::from(c));
        }
        L2Op { terms: out }
    }

    pub fn zero() -> Self {
        L2Op::default()
    }

    pub fn identity() -> Self {
        L2Op::new([(0, 0, Scalar::one())])
    }

    /// `x^2 - D^2`.
    pub fn oscillator() -> Self {
        L2Op::new([(2, 0, Scalar::one()), (0, 2, Scalar::int(-1))])
    }

    pub fn form(&self) -> &NormalForm {
        &self.terms
    }

    pub fn coeff(&self, m: usize, q: usize) -> Surd {
        self.terms.get(&(m, q)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.terms.values().all(Surd::is_exact)
    }

    /// Highest power of `D`.
    pub fn order(&self) -> usize {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Highest power of `x`.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn add(&self, other: &L2Op) -> L2Op {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut terms, *k, c.clone());
        }
        L2Op { terms }
    }

    pub fn scale(&self, c: &Scalar) -> L2Op {
        L2Op::from_form(self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect())
    }

    pub fn sub(&self, other: &L2Op) -> L2Op {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    /// Composition, normal-ordered with `D x = x D + 1`.
    pub fn mul(&self, other: &L2Op) -> L2Op {
        L2Op { terms: normal_product(&self.terms, &other.terms, &Scalar::one()) }
    }

    pub fn approx_eq(&self, other: &L2Op, tol: f64) -> bool {
        let keys: std::collections::BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|&(m, q)| self.coeff(m, q).approx_eq(&other.coeff(m, q), tol))
    }

    /// `{"terms": [{"x_power": m, "d_power": q, "coeff": [re, im]}, ...]}`.
    /// Exact coefficients with a `sqrt(2)` part also carry
    /// `"exact": {"rational": [..], "sqrt2": [..]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(&(m, q), c)| {
                let mut t = Map::new();
                t.insert("x_power".into(), json!(m));
                t.insert("d_power".into(), json!(q));
                t.insert("coeff".into(), c.to_scalar().to_json());
                if c.is_exact() && !c.sqrt2.is_zero() {
                    t.insert("exact".into(), json!({"rational": c.rational.to_json(), "sqrt2": c.sqrt2.to_json()}));
                }
                Value::Object(t)
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<L2Op> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("L2 operator needs a \"terms\" array".into()))?;
        let mut out = NormalForm::new();
        for t in terms {
            let power = |k: &str| {
                t.get(k)
                    .and_then(Value::as_u64)
                    .map(|p| p as usize)
                    .ok_or_else(|| Error::Format(format!("term needs a nonnegative integer \"{k}\"")))
            };
            let (m, q) = (power("x_power")?, power("d_power")?);
            let c = match t.get("exact") {
                Some(e) => Surd::new(
                    Scalar::from_json(e.get("rational").ok_or_else(|| Error::Format("exact needs \"rational\"".into()))?)?,
                    Scalar::from_json(e.get("sqrt2").ok_or_else(|| Error::Format("exact needs \"sqrt2\"".into()))?)?,
                ),
                None => Surd::from(Scalar::from_json(t.get("coeff").ok_or_else(|| Error::Format("term needs \"coeff\"".into()))?)?),
            };
            add_term(&mut out, (m, q), c);
        }
        Ok(L2Op { terms: out })
    }
}

impl fmt::Display for L2Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(m, q), c)| {
                let mut s = format!("({c})");
                match m {
                    0 => {}
                    1 => s.push_str(" x"),
                    _ => s.push_str(&format!(" x^{m}")),
                }
                match q {
                    0 => {}
                    1 => s.push_str(" D"),
                    _ => s.push_str(&format!(" D^{q}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
