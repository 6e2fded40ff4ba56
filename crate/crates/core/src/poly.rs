//! Univariate polynomials over [`Scalar`], stored by ascending power.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial with trailing zero coefficients trimmed; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `a z + b`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        Poly::new(vec![b, a])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Scalar::int(c)).collect())
    }

    pub fn from_c64(coeffs: &[Complex64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_c64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero past the end.
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_exact)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::conj).collect())
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        self.nth_derivative(1)
    }

    pub fn nth_derivative(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(k)
                .map(|(n, c)| c * Scalar::falling(n, k))
                .collect(),
        )
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z + c;
        }
        acc
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_c64())
    }

    pub fn to_approx(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::to_approx).collect())
    }

    /// `(az+b)^k`.
    pub fn linear_power(a: &Scalar, b: &Scalar, k: usize) -> Poly {
        let base = Poly::linear(a.clone(), b.clone());
        (0..k).fold(Poly::constant(Scalar::one()), |acc, _| &acc * &base)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(Scalar::one()), |acc, _| &acc * self)
    }

    /// Coefficients of `self` in powers of `(az+b)`: returns `out` with
    /// `sum_k out[k] (az+b)^k == self` identically.
    pub fn rebase(&self, a: &Scalar, b: &Scalar) -> Result<Vec<Scalar>> {
        let inv_a = Scalar::one().checked_div(a).ok_or(Error::InvalidBasis)?;
        // z = (y - b)/a as a polynomial in y
        let z_in_y = Poly::linear(inv_a.clone(), -(b * &inv_a));
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &z_in_y) + &Poly::constant(c.clone());
        }
        Ok(acc.coeffs)
    }

    /// Every coefficient within `tol` after padding; exact coefficients
    /// compare exactly.
    pub fn approx_eq(&self, other: &Poly, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k).approx_eq(&other.coeff(k), tol))
    }

    /// Largest coefficient distance against `other`.
    pub fn max_distance(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).map(|k| self.coeff(k).distance(&other.coeff(k))).fold(0.0, f64::max)
    }

    /// Euclidean division; `None` for a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Some((Poly::zero(), self.clone()));
        };
        let mut quot = vec![Scalar::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &(&q * c);
            }
            // exact cancellation for approximate data
            rem[k + dd] = Scalar::zero();
            quot[k] = q;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.degree() {
            Some(d) => {
                let inv = Scalar::one() / &self.coeffs[d];
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor. Meaningful for exact coefficients.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force expansion of `sum_k c[k] (az+b)^k` for checking rebase.
    fn expand(c: &[Scalar], a: &Scalar, b: &Scalar) -> Poly {
        c.iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, ck)| &acc + &Poly::linear_power(a, b, k).scale(ck))
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // (z-1)(z+1)
        let b = Poly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = Poly::from_ints(&[3, 0, 2]).div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, Poly::from_ints(&[3, 0, 2]));
        assert_eq!(a.gcd(&Poly::from_ints(&[2, 2])), Poly::from_ints(&[1, 1]));
        assert!(a.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn rebase_identity_and_sign_flip() {
        let z = Poly::from_ints(&[0, 1]);
        assert_eq!(z.rebase(&Scalar::one(), &Scalar::zero()).unwrap(), vec![Scalar::zero(), Scalar::one()]);
        assert_eq!(z.rebase(&Scalar::int(-1), &Scalar::zero()).unwrap(), vec![Scalar::zero(), Scalar::int(-1)]);
    }

    #[test]
    fn rebase_square_about_minus_one() {
        let p = Poly::from_ints(&[0, 0, 1]);
        let out = p.rebase(&Scalar::one(), &Scalar::one()).unwrap();
        assert_eq!(out, vec![Scalar::int(1), Scalar::int(-2), Scalar::int(1)]);
        assert_eq!(expand(&out, &Scalar::one(), &Scalar::one()), p);
    }

    #[test]
    fn rebase_rejects_zero_a() {
        let p = Poly::from_ints(&[1, 2]);
        assert_eq!(p.rebase(&Scalar::zero(), &Scalar::one()), Err(Error::InvalidBasis));
    }

    #[test]
    fn rebase_exact_round_trip_gaussian_basis() {
        let p = Poly::new(vec![Scalar::gaussian(1, 2), Scalar::int(-3), Scalar::ratio(1, 2), Scalar::gaussian(0, 5)]);
        let a = Scalar::gaussian(0, 1);
        let b = Scalar::ratio(3, 4);
        let out = p.rebase(&a, &b).unwrap();
        assert_eq!(expand(&out, &a, &b), p);
    }

    #[test]
    fn trims_and_degrees() {
        let p = Poly::new(vec![Scalar::int(1), Scalar::zero(), Scalar::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::new(vec![Scalar::zero()]).degree(), None);
        assert!(Poly::new(vec![]).is_zero());
    }

    #[test]
    fn derivatives_and_eval() {
        let p = Poly::from_ints(&[1, 2, 3, 4]); // 1 + 2z + 3z^2 + 4z^3
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6, 12]));
        assert_eq!(p.nth_derivative(3), Poly::from_ints(&[24]));
        assert_eq!(p.nth_derivative(4), Poly::zero());
        assert_eq!(p.eval(&Scalar::int(2)), Scalar::int(49));
    }
}
