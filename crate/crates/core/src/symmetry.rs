//! Symmetry criteria on the symbol matrix: `C_{a,b,c}`-selfadjointness
//! (`d[j][p] = d[p][j]` in the `(az+b)` basis) and selfadjointness
//! (`d[j][p] = conj(d[p][j])` in the z basis).

use num_complex::Complex64;
use serde::Serialize;

use crate::conjugation::ConjugationParams;
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::symbol::SymbolMatrix;

pub const DEFAULT_SYMMETRY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub j: usize,
    pub p: usize,
    pub d_jp: [f64; 2],
    pub d_pj: [f64; 2],
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub holds: bool,
    /// Set when the symbol matrix does not exist.
    pub reason: Option<String>,
    pub violations: Vec<Violation>,
    pub max_asymmetry: f64,
    pub exact: bool,
}

impl SymmetryReport {
    fn not_representable(e: Error) -> Self {
        SymmetryReport { holds: false, reason: Some(e.to_string()), violations: Vec::new(), max_asymmetry: f64::INFINITY, exact: false }
    }
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn check_matrix(m: &SymbolMatrix, tol: f64, partner: impl Fn(&Scalar) -> Scalar) -> SymmetryReport {
    let n = m.size();
    let mut violations = Vec::new();
    let mut max_asymmetry: f64 = 0.0;
    let mut exact = true;
    for j in 0..n {
        for p in j..n {
            let left = m.entry(j, p);
            let right = partner(m.entry(p, j));
            let diff = left - &right;
            exact &= diff.is_exact();
            let (bad, dist) = if diff.is_exact() {
                (!diff.is_zero(), diff.abs())
            } else {
                let dist = diff.abs();
                (dist > tol, dist)
            };
            max_asymmetry = max_asymmetry.max(dist);
            if bad {
                violations.push(Violation { j, p, d_jp: pair(left.to_c64()), d_pj: pair(m.entry(p, j).to_c64()), distance: dist });
            }
        }
    }
    SymmetryReport { holds: violations.is_empty(), reason: None, violations, max_asymmetry, exact }
}

/// `T_max` is `C_{a,b,c}`-selfadjoint iff its symbol matrix in the
/// `(az+b)` basis exists and is symmetric.
pub fn is_c_selfadjoint(op: &DiffOp, params: &ConjugationParams, tol: f64) -> SymmetryReport {
    match SymbolMatrix::new(op, params.a(), params.b()) {
        Ok(m) => check_matrix(&m, tol, |x| x.clone()),
        Err(e) => SymmetryReport::not_representable(e),
    }
}

/// `T_max` is selfadjoint iff its z-basis symbol matrix exists and is
/// Hermitian.
pub fn is_selfadjoint(op: &DiffOp, tol: f64) -> SymmetryReport {
    match SymbolMatrix::new(op, &Scalar::one(), &Scalar::zero()) {
        Ok(m) => check_matrix(&m, tol, Scalar::conj),
        Err(e) => SymmetryReport::not_representable(e),
    }
}

/// For a selfadjoint operator `(d00 + d_{n0} z^n) + (d_{0n} + d_{nn} z^n) d^n`,
/// a conjugation `C_{a,0,1}` for which it is also C-selfadjoint: `a = 1` if
/// `d_{0n} = 0`, otherwise `a^n = d_{n0}/d_{0n}` (principal root; for
/// `n = 1` this is the ratio itself and stays exact).
///
/// Returns `None` when the operator does not have that shape.
pub fn selfadjoint_witness(op: &DiffOp) -> Option<ConjugationParams> {
    let n = op.order();
    if n == 0 || op.is_zero() {
        return None;
    }
    let psi0 = op.symbol(0);
    let psin = op.symbol(n);
    let only_terms = |p: &Poly| p.coeffs().iter().enumerate().all(|(k, c)| k == 0 || k == n || c.is_zero());
    if !only_terms(&psi0) || !only_terms(&psin) || (1..n).any(|j| !op.symbol(j).is_zero()) {
        return None;
    }
    let d_n0 = psi0.coeff(n);
    let d_0n = psin.coeff(0);
    let a = if d_0n.is_zero() {
        Scalar::one()
    } else {
        let ratio = &d_n0 / &d_0n;
        if n == 1 {
            ratio
        } else {
            let r = ratio.to_c64();
            Scalar::from_c64(Complex64::from_polar(r.norm().powf(1.0 / n as f64), r.arg() / n as f64))
        }
    };
    ConjugationParams::new(a, Scalar::zero(), Scalar::one()).ok()
}

/// The first-order families
/// `Gamma1 = (G + aKz) + K d` and `Gamma2 = (G - alpha(aK + b) z) + alpha(z - K) d`,
/// both `C_{a,b,c}`-selfadjoint.
pub fn gamma_examples(g: &Scalar, k: &Scalar, alpha: &Scalar, params: &ConjugationParams) -> Result<(DiffOp, DiffOp)> {
    let (a, b) = (params.a(), params.b());
    let gamma1 = DiffOp::new(vec![Poly::linear(a * k, g.clone()), Poly::constant(k.clone())]);
    let gamma2 = DiffOp::new(vec![
        Poly::linear(-(alpha * &(a * k + b)), g.clone()),
        Poly::linear(alpha.clone(), -(alpha * k)),
    ]);
    Ok((gamma1, gamma2))
}
