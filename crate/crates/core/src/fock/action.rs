//! The weighted composition conjugation
//! `C f(z) = c e^{bz} conj(f(conj(az+b)))` on truncated series.

use num_complex::Complex64;

use super::series::{ln_factorial, FockSeries};
use crate::conjugation::ConjugationParams;

fn truncated_mul(x: &[Complex64], y: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (i, a) in x.iter().enumerate().take(n) {
        if a.norm() == 0.0 {
            continue;
        }
        for (j, b) in y.iter().enumerate().take(n - i) {
            out[i + j] += a * b;
        }
    }
    out
}

/// `c e^{bz} sum_k conj(f_k) (az+b)^k`, with every product truncated at the
/// input's truncation.
pub fn conjugation_apply(params: &ConjugationParams, f: &FockSeries) -> FockSeries {
    let (a, b, c) = params.values();
    let n = f.len();
    // Horner in (az+b)
    let mut acc = vec![Complex64::new(0.0, 0.0); n];
    for fk in f.coeffs().iter().rev() {
        let mut next = vec![Complex64::new(0.0, 0.0); n];
        for (i, v) in acc.iter().enumerate() {
            next[i] += v * b;
            if i + 1 < n {
                next[i + 1] += v * a;
            }
        }
        if n > 0 {
            next[0] += fk.conj();
        }
        acc = next;
    }
    let mut exp_b = Vec::with_capacity(n);
    let mut term = c;
    for j in 0..n {
        if j > 0 {
            term = term * b / j as f64;
        }
        exp_b.push(term);
    }
    FockSeries::new(truncated_mul(&acc, &exp_b, n), n)
}

/// The tail bound `|b|^N / N! * e^{|b| R}` for `e^{bz}` truncated at `N`
/// on the disc `|z| <= R`.
pub fn exp_tail_bound(b: Complex64, n: usize, radius: f64) -> f64 {
    let r = b.norm();
    if r == 0.0 {
        return 0.0;
    }
    (n as f64 * r.ln() - ln_factorial(n) + r * radius).exp()
}
