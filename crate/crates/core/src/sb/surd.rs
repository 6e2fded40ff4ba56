//! Numbers `p + q sqrt(2)` with [`Scalar`] parts, closed under the
//! arithmetic of the transform (every letter carries a `1/sqrt(2)`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::scalar::Scalar;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Surd {
    pub rational: Scalar,
    pub sqrt2: Scalar,
}

impl Surd {
    pub fn new(rational: Scalar, sqrt2: Scalar) -> Self {
        Surd { rational, sqrt2 }
    }

    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::from(Scalar::one())
    }

    /// `2^(-k/2)`, exact.
    pub fn inv_sqrt2_pow(k: usize) -> Self {
        let half = Scalar::ratio(1, 2);
        let base = half.pow((k / 2) as u32);
        if k % 2 == 0 {
            Surd::new(base, Scalar::zero())
        } else {
            // 2^(-1/2) = sqrt(2)/2
            Surd::new(Scalar::zero(), &base * &half)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.rational.is_exact() && self.sqrt2.is_exact()
    }

    /// The value as a [`Scalar`]; exact when there is no `sqrt(2)` part.
    pub fn to_scalar(&self) -> Scalar {
        if self.sqrt2.is_zero() {
            self.rational.clone()
        } else {
            Scalar::from_c64(self.to_c64())
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        self.rational.to_c64() + self.sqrt2.to_c64() * std::f64::consts::SQRT_2
    }

    pub fn scale(&self, c: &Scalar) -> Surd {
        Surd::new(&self.rational * c, &self.sqrt2 * c)
    }

    pub fn approx_eq(&self, other: &Surd, tol: f64) -> bool {
        if self.is_exact() && other.is_exact() {
            return self == other;
        }
        (self.to_c64() - other.to_c64()).norm() <= tol
    }
}

impl From<Scalar> for Surd {
    fn from(s: Scalar) -> Self {
        Surd::new(s, Scalar::zero())
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        Surd::new(&self.rational + &rhs.rational, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        Surd::new(&self.rational - &rhs.rational, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let two = Scalar::int(2);
        Surd::new(
            &self.rational * &rhs.rational + &(&self.sqrt2 * &rhs.sqrt2) * &two,
            &self.rational * &rhs.sqrt2 + &self.sqrt2 * &rhs.rational,
        )
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-&self.rational, -&self.sqrt2)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "({})*sqrt2", self.sqrt2),
            (false, false) => write!(f, "{} + ({})*sqrt2", self.rational, self.sqrt2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_inverse_root_two() {
        let r = Surd::inv_sqrt2_pow(1);
        assert_eq!(&r * &r, Surd::from(Scalar::ratio(1, 2)));
        assert_eq!(Surd::inv_sqrt2_pow(4), Surd::from(Scalar::ratio(1, 4)));
        assert!((Surd::inv_sqrt2_pow(3).to_c64().re - 2f64.powf(-1.5)).abs() < 1e-15);
        assert!(Surd::inv_sqrt2_pow(2).to_scalar().is_exact());
    }
}
