//! Parameters of the weighted composition conjugations
//! `C f(z) = c e^{bz} conj(f(conj(az+b)))`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_VALIDATION_TOL: f64 = 1e-12;

/// A validated triple `(a, b, c)` with `|a| = 1`, `conj(a) b + conj(b) = 0`
/// and `|c|^2 e^{|b|^2} = 1`, each within the validation tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationParams {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    tol: f64,
}

impl ConjugationParams {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        Self::with_tolerance(a, b, c, DEFAULT_VALIDATION_TOL)
    }

    pub fn with_tolerance(a: Scalar, b: Scalar, c: Scalar, tol: f64) -> Result<Self> {
        let (av, bv, cv) = (a.to_c64(), b.to_c64(), c.to_c64());
        let r_a = (av.norm() - 1.0).abs();
        if r_a.is_nan() || r_a > tol {
            return Err(Error::InvalidConjugation(format!("| |a| - 1 | = {r_a:e} exceeds {tol:e}")));
        }
        let r_b = (av.conj() * bv + bv.conj()).norm();
        if r_b.is_nan() || r_b > tol {
            return Err(Error::InvalidConjugation(format!("| conj(a) b + conj(b) | = {r_b:e} exceeds {tol:e}")));
        }
        let r_c = (cv.norm_sqr() * bv.norm_sqr().exp() - 1.0).abs();
        if r_c.is_nan() || r_c > tol {
            return Err(Error::InvalidConjugation(format!("| |c|^2 e^(|b|^2) - 1 | = {r_c:e} exceeds {tol:e}")));
        }
        Ok(ConjugationParams { a, b, c, tol })
    }

    /// `C_{-1,0,1}`: `f -> conj(f(-conj z))`.
    pub fn pt() -> Self {
        ConjugationParams { a: Scalar::int(-1), b: Scalar::zero(), c: Scalar::one(), tol: DEFAULT_VALIDATION_TOL }
    }

    /// `C_{1,0,1}`: `f -> conj(f(conj z))`.
    pub fn standard() -> Self {
        ConjugationParams { a: Scalar::one(), b: Scalar::zero(), c: Scalar::one(), tol: DEFAULT_VALIDATION_TOL }
    }

    /// Builds the triple from angles: `a = e^{i theta}`, `b = r e^{i (theta + pi)/2}`,
    /// `c = e^{-r^2/2} e^{i chi}`. Every valid triple arises this way.
    pub fn from_angles(theta: f64, r: f64, chi: f64) -> Self {
        let a = Complex64::from_polar(1.0, theta);
        let b = Complex64::from_polar(r, (theta + std::f64::consts::PI) / 2.0);
        let c = Complex64::from_polar((-r * r / 2.0).exp(), chi);
        ConjugationParams {
            a: Scalar::from_c64(a),
            b: Scalar::from_c64(b),
            c: Scalar::from_c64(c),
            tol: DEFAULT_VALIDATION_TOL,
        }
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Symbol-level transforms are exact when `a` and `b` are; `c` never
    /// enters them.
    pub fn is_exact(&self) -> bool {
        self.a.is_exact() && self.b.is_exact()
    }

    pub fn values(&self) -> (Complex64, Complex64, Complex64) {
        (self.a.to_c64(), self.b.to_c64(), self.c.to_c64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_pt_and_standard() {
        assert!(ConjugationParams::new(Scalar::int(-1), Scalar::zero(), Scalar::one()).is_ok());
        assert!(ConjugationParams::new(Scalar::one(), Scalar::zero(), Scalar::i()).is_ok());
    }

    #[test]
    fn rejects_each_violated_condition() {
        let e = ConjugationParams::new(Scalar::int(2), Scalar::zero(), Scalar::one());
        assert!(matches!(e, Err(Error::InvalidConjugation(m)) if m.contains("|a|")));
        let e = ConjugationParams::new(Scalar::one(), Scalar::one(), Scalar::one());
        assert!(matches!(e, Err(Error::InvalidConjugation(m)) if m.contains("conj(a) b")));
        let e = ConjugationParams::new(Scalar::one(), Scalar::zero(), Scalar::int(2));
        assert!(matches!(e, Err(Error::InvalidConjugation(m)) if m.contains("|c|")));
    }

    #[test]
    fn angle_family_is_valid() {
        for i in 0..20 {
            let t = i as f64 * 0.37;
            let p = ConjugationParams::from_angles(t, 0.05 * i as f64, 1.3 * t);
            let (a, b, c) = p.values();
            assert!(ConjugationParams::new(Scalar::from_c64(a), Scalar::from_c64(b), Scalar::from_c64(c)).is_ok());
        }
    }

    #[test]
    fn imaginary_b_with_unit_a() {
        // a = 1, b = i t satisfies the middle condition exactly
        let b = Complex64::new(0.0, 0.5);
        let c = Complex64::new((-b.norm_sqr() / 2.0).exp(), 0.0);
        let p = ConjugationParams::new(Scalar::one(), Scalar::ratio(1, 2) * Scalar::i(), Scalar::from_c64(c)).unwrap();
        assert!(p.is_exact());
    }
}
