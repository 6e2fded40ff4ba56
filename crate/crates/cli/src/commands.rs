use std::time::Instant;

use fockcalc_core::fock::{spectrum, SpectrumMode, SpectrumOptions};
use fockcalc_core::interchange::document;
use fockcalc_core::sb::{fock_to_lebesgue, lebesgue_to_fock};
use fockcalc_core::symmetry::DEFAULT_SYMMETRY_TOL;
use fockcalc_core::{adjoint_op, conjugate_op, is_c_selfadjoint, is_selfadjoint, selfadjoint_witness, ConjugationParams, DiffOp, Scalar};
use serde_json::{json, Value};

use crate::args::{CheckMode, Direction, Suite};
use crate::error::{CliError, EXIT_FAIL, EXIT_PASS};
use crate::input::{self, Input};
use crate::registry::{self, Subject};
use crate::report::{ResultEntry, RunReport};
use crate::suites::{self, Context};

/// A command's JSON result, its text rendering and the exit code.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Rendered {
    fn report(r: RunReport) -> Self {
        let code = if r.pass() { EXIT_PASS } else { EXIT_FAIL };
        Rendered { text: r.to_text(), json: r.to_json(), code }
    }
}

fn require(input: Option<Input>) -> Result<Input, CliError> {
    input.ok_or_else(|| CliError::malformed("no operator given: pass an operator file or --example NAME"))
}

fn fock_subject(input: &Input) -> Result<(&DiffOp, Option<&ConjugationParams>), CliError> {
    match &input.subject {
        Subject::Fock { op, conjugation } => Ok((op, conjugation.as_ref())),
        Subject::L2(_) => Err(CliError::malformed(format!("{} is an L^2 operator; this command needs a Fock operator", input.name))),
    }
}

pub fn adjoint(input: Option<Input>) -> Result<Rendered, CliError> {
    let input = require(input)?;
    let (op, conjugation) = fock_subject(&input)?;
    let s = adjoint_op(op, &Scalar::one(), &Scalar::zero())?;
    Ok(Rendered { json: document(&s, conjugation), text: format!("{s}\n"), code: EXIT_PASS })
}

pub fn check(input: Option<Input>, mode: CheckMode, tol: Option<f64>) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let input = require(input)?;
    let (op, conjugation) = fock_subject(&input)?;
    let tol = tol.unwrap_or(DEFAULT_SYMMETRY_TOL);
    let mut results = Vec::new();
    let command = match mode {
        CheckMode::SelfAdjoint => {
            let r = is_selfadjoint(op, tol);
            results.push(symmetry_entry("self", &input.name, "hermitian-symbol-matrix", &r));
            let s = adjoint_op(op, &Scalar::one(), &Scalar::zero())?;
            results.push(transform_entry("self", &input.name, "adjoint-equals-op", op, &s, tol));
            "check --mode self"
        }
        CheckMode::CSelf => {
            let p = conjugation.ok_or_else(|| CliError::malformed("--mode c-self needs a \"conjugation\" block"))?;
            let r = is_c_selfadjoint(op, p, tol);
            results.push(symmetry_entry("c-self", &input.name, "symmetric-symbol-matrix", &r));
            let star = adjoint_op(op, &Scalar::one(), &Scalar::zero())?;
            let cstarc = conjugate_op(&star, p)?;
            results.push(transform_entry("c-self", &input.name, "conjugated-adjoint-equals-op", op, &cstarc, tol));
            "check --mode c-self"
        }
    };
    let inputs = json!({"command": command, "tol": tol, "input": input.document});
    Ok(Rendered::report(RunReport::new(command, &inputs, results, started)))
}

fn symmetry_entry(suite: &str, name: &str, check: &str, r: &fockcalc_core::SymmetryReport) -> ResultEntry {
    let counterexample = (!r.holds).then(|| {
        r.violations.first().map(|v| serde_json::to_value(v).expect("serializes")).unwrap_or_else(|| json!({"reason": r.reason}))
    });
    ResultEntry {
        suite: suite.into(),
        subject: name.into(),
        check: check.into(),
        pass: r.holds,
        skipped: false,
        max_residual: r.max_asymmetry,
        samples: 1,
        counterexample,
        data: Some(serde_json::to_value(r).expect("report serializes")),
    }
}

fn transform_entry(suite: &str, name: &str, check: &str, op: &DiffOp, other: &DiffOp, tol: f64) -> ResultEntry {
    let d = if other == op { 0.0 } else { other.max_distance(op) };
    ResultEntry::single(suite, name, check, d, tol, document(other, None))
}

/// Whether the spectrum may be read as an equality: the input's flag, else
/// symmetry for its conjugation, else a conjugation built from
/// selfadjointness.
fn c_selfadjoint_flag(input: &Input, op: &DiffOp, conjugation: Option<&ConjugationParams>) -> bool {
    if let Some(flag) = input.c_selfadjoint {
        return flag;
    }
    if suites::c_selfadjoint(op, conjugation, DEFAULT_SYMMETRY_TOL) {
        return true;
    }
    is_selfadjoint(op, DEFAULT_SYMMETRY_TOL).holds
        && selfadjoint_witness(op).is_some_and(|p| is_c_selfadjoint(op, &p, DEFAULT_SYMMETRY_TOL).holds)
}

pub fn spectrum_cmd(input: Option<Input>, mode: SpectrumMode, kmax: usize, n: Option<usize>, tol: Option<f64>) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let input = require(input)?;
    let truncation = input::truncation(n, Some(&input))?;
    let (op, conjugation) = fock_subject(&input)?;
    let tol = tol.unwrap_or(suites::EIGEN_TOL);
    let c_self = c_selfadjoint_flag(&input, op, conjugation);
    let opts = SpectrumOptions { mode, kmax, c_selfadjoint: c_self, truncation };
    let result = spectrum(op, &opts)?;
    let worst = result.eigenpairs.iter().map(|e| e.residual).fold(0.0, f64::max);
    let mut entry = ResultEntry::single("spectrum", &input.name, mode.as_str(), worst, tol, Value::Null);
    entry.counterexample = result.eigenpairs.iter().find(|e| e.residual > tol).map(|e| json!({"k": e.k, "residual": e.residual}));
    entry.samples = result.eigenpairs.len();
    let mut data = result.to_json();
    data["c_selfadjoint"] = json!(c_self);
    let entry = entry.with_data(data);
    let inputs = json!({"command": "spectrum", "mode": mode.as_str(), "kmax": kmax, "n": truncation, "tol": tol, "input": input.document});
    let report = RunReport::new("spectrum", &inputs, vec![entry], started);
    let mut rendered = Rendered::report(report);
    rendered.text = spectrum_text(&result, c_self) + &rendered.text;
    Ok(rendered)
}

fn spectrum_text(r: &fockcalc_core::fock::SpectrumResult, c_self: bool) -> String {
    let shown: Vec<String> = r.enumerated.iter().take(12).map(|v| v.to_string()).collect();
    let more = if r.enumerated.len() > 12 { ", ..." } else { "" };
    let mut out = format!("kind: {}", r.kind.as_str());
    if c_self {
        out.push_str(" (C-selfadjoint)");
    }
    out.push_str(&format!("\nvalues: {{{}{more}}}\n", shown.join(", ")));
    if r.discrepancy {
        out.push_str("formula variants disagree:");
        for v in r.variants.iter().filter(|v| !v.agrees) {
            out.push_str(&format!(" {}", v.name));
        }
        out.push('\n');
    }
    if let Some(note) = &r.note {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

pub fn sb(input: Option<Input>, direction: Direction) -> Result<Rendered, CliError> {
    let input = require(input)?;
    match (direction, &input.subject) {
        (Direction::ToL2, Subject::Fock { op, .. }) => {
            let l = fock_to_lebesgue(op);
            Ok(Rendered { json: l.to_json(), text: format!("{l}\n"), code: EXIT_PASS })
        }
        (Direction::ToFock, Subject::L2(l)) => {
            let op = lebesgue_to_fock(l);
            Ok(Rendered { json: document(&op, None), text: format!("{op}\n"), code: EXIT_PASS })
        }
        (Direction::ToL2, Subject::L2(_)) => Err(CliError::malformed("--direction to-l2 needs a Fock operator (\"symbols\")")),
        (Direction::ToFock, Subject::Fock { .. }) => Err(CliError::malformed("--direction to-fock needs an L^2 operator (\"terms\")")),
    }
}

pub fn verify(input: Option<Input>, suite: Suite, seed: u64, n: Option<usize>, nodes: usize) -> Result<Rendered, CliError> {
    let started = Instant::now();
    let truncation = input::truncation(n, input.as_ref())?;
    let ctx = Context { n: truncation, seed, nodes, trials: 8 };
    let subjects: Vec<(String, Subject)> = match &input {
        Some(i) => vec![(i.name.clone(), i.subject.clone())],
        None => registry::examples().into_iter().map(|e| (e.name.to_string(), e.subject)).collect(),
    };
    let wanted = |s: &str| suite == Suite::All || suite.as_str() == s;
    let mut results = Vec::new();
    for (name, subject) in &subjects {
        if let Subject::Fock { op, conjugation } = subject {
            if wanted("adjoint") {
                results.extend(suites::adjoint_suite(name, op, &ctx));
            }
            if wanted("conjugation") {
                results.extend(suites::conjugation_suite(name, op, conjugation.as_ref(), &ctx));
            }
            if wanted("kernel") {
                results.extend(suites::kernel_suite(name, op, &ctx));
            }
            if wanted("spectrum") {
                let c_self = suites::c_selfadjoint(op, conjugation.as_ref(), DEFAULT_SYMMETRY_TOL);
                results.extend(suites::spectrum_suite(name, op, c_self, &ctx));
            }
        }
        if wanted("sb") {
            results.extend(suites::sb_subject_suite(name, subject));
        }
    }
    if wanted("sb") {
        let params = subjects.iter().find_map(|(_, s)| match s {
            Subject::Fock { conjugation: Some(c), .. } if input.is_some() => Some(c.clone()),
            _ => None,
        });
        results.extend(suites::sb_kernel_suite(params.as_ref(), &ctx));
    }
    let docs: Vec<Value> = match &input {
        Some(i) => vec![i.document.clone()],
        None => vec![json!("built-in examples")],
    };
    let inputs = json!({"command": "verify", "suite": suite.as_str(), "seed": seed, "n": truncation, "nodes": nodes, "input": docs});
    Ok(Rendered::report(RunReport::new(&format!("verify --suite {}", suite.as_str()), &inputs, results, started)))
}

pub fn list_examples() -> Rendered {
    let entries: Vec<Value> = registry::examples()
        .iter()
        .map(|e| {
            let operator = match &e.subject {
                Subject::Fock { op, conjugation } => document(op, conjugation.as_ref()),
                Subject::L2(l) => l.to_json(),
            };
            json!({"name": e.name, "description": e.description, "operator": operator})
        })
        .collect();
    let text = registry::examples().iter().map(|e| format!("{:<22} {}\n", e.name, e.description)).collect();
    Rendered { json: Value::Array(entries), text, code: EXIT_PASS }
}
