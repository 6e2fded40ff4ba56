//! Symbol-level adjoint and conjugation transforms.

use crate::conjugation::ConjugationParams;
use crate::diffop::DiffOp;
use crate::error::Result;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::symbol::BasisCoefficients;

fn powers(x: &Scalar, n: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Scalar::one());
    for k in 1..=n {
        out.push(&out[k - 1] * x);
    }
    out
}

/// The adjoint `S` of `T = D[psi]` on maximal domains, computed from the
/// coefficients `d[l][j]` of `psi_j` in powers of `(az+b)`:
///
/// `psihat_p(z) = sum_j z^j sum_{l >= p} C(l, p) conj(d[l][j] a^p b^(l-p))`.
///
/// The result does not depend on the basis; `(1, 0)` is the plain z basis.
/// The adjoint of an operator whose symbols have degree `D` has order `D`.
pub fn adjoint_op(op: &DiffOp, a: &Scalar, b: &Scalar) -> Result<DiffOp> {
    let d = BasisCoefficients::new(op, a, b)?;
    if op.is_zero() {
        return Ok(DiffOp::zero());
    }
    let top = d.nrows();
    let a_pow = powers(a, top);
    let b_pow = powers(b, top);
    let symbols = (0..top)
        .map(|p| {
            let coeffs = (0..d.ncols())
                .map(|j| {
                    (p..top)
                        .map(|l| {
                            let dl = d.get(l, j);
                            if dl.is_zero() {
                                return Scalar::zero();
                            }
                            (dl * &a_pow[p] * &b_pow[l - p]).conj() * Scalar::binomial(l, p)
                        })
                        .sum()
                })
                .collect();
            Poly::new(coeffs)
        })
        .collect();
    Ok(DiffOp::new(symbols))
}

/// The differential expression of `C op C` for a weighted composition
/// conjugation `C`. Valid for every operator (no symmetry assumed): the
/// coefficient of `z^l f^(j)` is `sum_{p >= j} C(p, j) conj(d[l][p] a^j b^(p-j))`.
pub fn conjugate_op(op: &DiffOp, params: &ConjugationParams) -> Result<DiffOp> {
    let (a, b) = (params.a(), params.b());
    let d = BasisCoefficients::new(op, a, b)?;
    if op.is_zero() {
        return Ok(DiffOp::zero());
    }
    let cols = d.ncols();
    let a_pow = powers(a, cols);
    let b_pow = powers(b, cols);
    let symbols = (0..cols)
        .map(|j| {
            let coeffs = (0..d.nrows())
                .map(|l| {
                    (j..cols)
                        .map(|p| {
                            let dl = d.get(l, p);
                            if dl.is_zero() {
                                return Scalar::zero();
                            }
                            (dl * &a_pow[j] * &b_pow[p - j]).conj() * Scalar::binomial(p, j)
                        })
                        .sum()
                })
                .collect();
            Poly::new(coeffs)
        })
        .collect();
    Ok(DiffOp::new(symbols))
}
