//! Brute-force checks of the adjoint identity and the pointwise derivative
//! bound.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::series::{inner_product, ln_factorial, poly_inner_product, FockSeries};
use crate::adjoint::adjoint_op;
use crate::diffop::DiffOp;
use crate::error::Result;
use crate::poly::Poly;
use crate::report::CheckReport;
use crate::scalar::Scalar;

pub const ADJOINT_IDENTITY_TOL: f64 = 1e-9;

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn random_exact_poly(rng: &mut impl Rng, degree: usize) -> Poly {
    Poly::new((0..=degree).map(|_| Scalar::gaussian(rng.gen_range(-9..=9), rng.gen_range(-9..=9))).collect())
}

/// Coefficients of unit size in the orthonormal basis.
fn random_approx_poly(rng: &mut impl Rng, degree: usize) -> Poly {
    Poly::new(
        (0..=degree)
            .map(|n| {
                let s = (-0.5 * ln_factorial(n)).exp();
                Scalar::approx(s * rng.gen_range(-1.0..1.0), s * rng.gen_range(-1.0..1.0))
            })
            .collect(),
    )
}

/// Checks `<T f, g> = <f, S g>` with `S` the symbol adjoint, on `trials`
/// random polynomial pairs of degree at most `n - 1 - max deg psi_j`.
/// Exact operators are checked in exact arithmetic.
pub fn verify_adjoint_identity(op: &DiffOp, n: usize, trials: usize, seed: u64) -> Result<CheckReport> {
    let s = adjoint_op(op, &Scalar::one(), &Scalar::zero())?;
    let degree = n.saturating_sub(1 + op.max_degree());
    let exact = op.is_exact();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("adjoint-identity");
    for trial in 0..trials {
        let (lhs, rhs, residual);
        if exact {
            let f = random_exact_poly(&mut rng, degree);
            let g = random_exact_poly(&mut rng, degree);
            let l = poly_inner_product(&op.apply(&f), &g);
            let r = poly_inner_product(&f, &s.apply(&g));
            residual = if l == r { 0.0 } else { l.distance(&r) / (1.0 + l.abs()) };
            (lhs, rhs) = (l.to_c64(), r.to_c64());
        } else {
            let f = random_approx_poly(&mut rng, degree);
            let g = random_approx_poly(&mut rng, degree);
            let len = degree + op.max_degree() + s.max_degree() + 2;
            lhs = inner_product(&FockSeries::from_poly(&op.apply(&f), len), &FockSeries::from_poly(&g, len));
            rhs = inner_product(&FockSeries::from_poly(&f, len), &FockSeries::from_poly(&s.apply(&g), len));
            residual = (lhs - rhs).norm() / (1.0 + lhs.norm());
        }
        report.record(
            residual,
            if exact { 0.0 } else { ADJOINT_IDENTITY_TOL },
            json!({"trial": trial, "lhs": pair(lhs), "rhs": pair(rhs), "residual": residual}),
        );
    }
    Ok(report)
}

/// `(|f^(k)(z)|, e^{k(k+1)} (1+|z|)^k e^{|z|^2/2} ||f||)`.
pub fn derivative_bound(f: &FockSeries, k: usize, z: Complex64) -> (f64, f64) {
    let lhs = f.nth_derivative(k).eval(z).norm();
    let kf = k as f64;
    let r = z.norm();
    let bound = (kf * (kf + 1.0) + kf * (1.0 + r).ln() + r * r / 2.0).exp() * f.norm();
    (lhs, bound)
}

pub fn derivative_bound_check(f: &FockSeries, k: usize, z: Complex64) -> bool {
    let (lhs, bound) = derivative_bound(f, k, z);
    lhs <= bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::kernel::KernelVector;

    #[test]
    fn z_against_higher_monomial() {
        // <z * z^n, z^(n+1)> = (n+1)! = <z^n, d z^(n+1)>
        for n in 0..6 {
            let f = Poly::monomial(Scalar::one(), n);
            let g = Poly::monomial(Scalar::one(), n + 1);
            let lhs = poly_inner_product(&DiffOp::multiply_by_z().apply(&f), &g);
            let rhs = poly_inner_product(&f, &DiffOp::derivative().apply(&g));
            assert_eq!(lhs, Scalar::falling(n + 1, n + 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_and_approximate_runs() {
        let exact = verify_adjoint_identity(&DiffOp::oscillator(), 64, 5, 7).unwrap();
        assert!(exact.pass);
        assert_eq!(exact.max_residual, 0.0);
        let approx = verify_adjoint_identity(&DiffOp::oscillator().to_approx(), 64, 5, 7).unwrap();
        assert!(approx.pass, "{}", approx.max_residual);
        let zero = verify_adjoint_identity(&DiffOp::zero(), 16, 3, 1).unwrap();
        assert!(zero.pass && zero.max_residual == 0.0);
    }

    #[test]
    fn derivative_bounds() {
        assert!(derivative_bound_check(&FockSeries::monomial(0, 4), 0, Complex64::new(0.0, 0.0)));
        let k1 = KernelVector::new(Complex64::new(1.0, 0.0), 0, 64).series;
        assert!(derivative_bound_check(&k1, 1, Complex64::new(1.0, 0.0)));
    }
}
