//! The transform kernel `A(z, x) = pi^{-1/4} exp((-z^2 + 2 sqrt2 x z - x^2)/2)`
//! and the quadrature checks built on it.

use num_complex::Complex64;
use serde_json::json;

use super::quadrature::GaussHermite;
use crate::conjugation::ConjugationParams;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalar::Scalar;

pub const KERNEL_TOL: f64 = 1e-8;
pub const CORRESPONDENCE_TOL: f64 = 1e-6;
pub const MAX_HERMITE_ORDER: usize = 8;

/// Points `z` at which the kernel identities are compared.
pub const Z_SAMPLES: [Complex64; 5] = [
    Complex64::new(0.0, 0.0),
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(0.5, -0.5),
    Complex64::new(-1.2, 0.7),
];

/// `A(z, x) e^{x^2/2}`: the kernel with its real Gaussian moved into the
/// quadrature weight.
fn folded(z: Complex64, x: f64) -> Complex64 {
    let two_sqrt2 = 2.0 * std::f64::consts::SQRT_2;
    std::f64::consts::PI.powf(-0.25) * ((-z * z + z * (two_sqrt2 * x)) / 2.0).exp()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SBKernelPoint {
    pub z: Complex64,
    pub x: f64,
}

impl SBKernelPoint {
    pub fn value(&self) -> Complex64 {
        folded(self.z, self.x) * (-self.x * self.x / 2.0).exp()
    }
}

pub fn sb_kernel(z: Complex64, x: f64) -> Complex64 {
    SBKernelPoint { z, x }.value()
}

/// `h_{w,m} = d^m/du^m A(u, x)` at `u = w`, which is
/// `A(w, x) He_m(sqrt2 x - w)` with `He_{m+1}(s) = s He_m(s) - He_m'(s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteVector {
    pub w: Complex64,
    pub m: usize,
    /// Coefficients of `He_m` in ascending powers of `s`.
    pub hermite: Vec<f64>,
}

impl HermiteVector {
    pub fn new(w: Complex64, m: usize) -> Self {
        let mut he = vec![1.0];
        for _ in 0..m {
            let mut next = vec![0.0; he.len() + 1];
            for (k, c) in he.iter().enumerate() {
                next[k + 1] += c;
                if k > 0 {
                    next[k - 1] -= k as f64 * c;
                }
            }
            he = next;
        }
        HermiteVector { w, m, hermite: he }
    }

    fn factor(&self, x: f64) -> Complex64 {
        let s = std::f64::consts::SQRT_2 * x - self.w;
        self.hermite.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * s + c)
    }

    pub fn value(&self, x: f64) -> Complex64 {
        sb_kernel(self.w, x) * self.factor(x)
    }

    fn folded(&self, x: f64) -> Complex64 {
        folded(self.w, x) * self.factor(x)
    }
}

/// `int A(z, x) A(u, x) dx`, which equals `e^{zu}`.
pub fn sb_pair_integral(z: Complex64, u: Complex64, nodes: usize) -> Result<Complex64> {
    let rule = GaussHermite::shared(nodes)?;
    Ok(rule.integrate(|x| folded(z, x) * folded(u, x)))
}

/// `(U h_{w,m})(z)` by quadrature; the closed form is `z^m e^{zw}`.
pub fn hermite_image(z: Complex64, w: Complex64, m: usize, nodes: usize) -> Result<Complex64> {
    let rule = GaussHermite::shared(nodes)?;
    let h = HermiteVector::new(w, m);
    Ok(rule.integrate(|x| folded(z, x) * h.folded(x)))
}

fn relative(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1.0)
}

fn pair(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

/// Kernel-level checks of the transported conjugations. For each sample `w`:
/// time reversal sends `A(conj w, x)` to `A(w, x)`, whose transform is
/// `e^{zw}`; composing with parity gives `A(w, -x)` and `e^{-zw}`.
pub fn pt_correspondence_check(nodes: usize, samples: &[Complex64]) -> Result<CheckReport> {
    let rule = GaussHermite::shared(nodes)?;
    if let Some(w) = samples.iter().find(|w| w.norm() > 2.0) {
        return Err(Error::UnsupportedShape(format!("sample w = {w} lies outside |w| <= 2")));
    }
    let mut report = CheckReport::new("pt_correspondence");
    for &w in samples {
        for &z in &Z_SAMPLES {
            let t = rule.integrate(|x| folded(z, x) * folded(w, x));
            let pt = rule.integrate(|x| folded(z, x) * folded(w, -x));
            let (t_want, pt_want) = ((z * w).exp(), (-z * w).exp());
            for (branch, got, want) in [("T", t, t_want), ("PT", pt, pt_want)] {
                report.record(
                    relative(got, want),
                    CORRESPONDENCE_TOL,
                    json!({"branch": branch, "w": pair(w), "z": pair(z), "quadrature": pair(got), "closed_form": pair(want)}),
                );
            }
        }
    }
    Ok(report)
}

/// Transforms both sides of
/// `U^{-1} C U h_{0,m} = sum_k C(m,k) c a^k b^{m-k} h_{b,k}`
/// by quadrature and compares them, and the closed form
/// `c e^{bz} (az + b)^m`, at the sample points.
pub fn hermite_conjugation_pullback(params: &ConjugationParams, m: usize, nodes: usize) -> Result<CheckReport> {
    if m > MAX_HERMITE_ORDER {
        return Err(Error::UnsupportedShape(format!("Hermite order {m} exceeds {MAX_HERMITE_ORDER}")));
    }
    GaussHermite::shared(nodes)?;
    let (a, b, c) = params.values();
    let mut report = CheckReport::new("hermite_conjugation_pullback");
    for &z in &Z_SAMPLES {
        let zeta = (a * z + b).conj();
        let lhs = c * (b * z).exp() * hermite_image(zeta, Complex64::new(0.0, 0.0), m, nodes)?.conj();
        let mut rhs = Complex64::new(0.0, 0.0);
        for k in 0..=m {
            let weight = Scalar::binomial(m, k).to_c64() * c * a.powu(k as u32) * b.powu((m - k) as u32);
            rhs += weight * hermite_image(z, b, k, nodes)?;
        }
        let closed = c * (b * z).exp() * (a * z + b).powu(m as u32);
        let residual = relative(lhs, rhs).max(relative(lhs, closed));
        report.record(
            residual,
            CORRESPONDENCE_TOL,
            json!({"m": m, "z": pair(z), "lhs": pair(lhs), "rhs": pair(rhs), "closed_form": pair(closed)}),
        );
    }
    Ok(report)
}
