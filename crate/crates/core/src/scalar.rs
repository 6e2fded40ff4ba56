//! Complex scalars in two representations: exact Gaussian rationals and
//! double-precision complex numbers.
//!
//! Arithmetic between two exact values stays exact. Any operation that
//! touches an approximate value promotes the result to approximate mode.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact complex rational.
pub type ExactComplex = Complex<BigRational>;

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(ExactComplex),
    Approx(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(ExactComplex::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(ExactComplex::one())
    }

    /// The imaginary unit, exact.
    pub fn i() -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::zero(), BigRational::one()))
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::from_integer(n.into()), BigRational::zero()))
    }

    pub fn big_int(n: BigInt) -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::from_integer(n), BigRational::zero()))
    }

    /// `numer / denom` as an exact real. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::Exact(ExactComplex::new(
            BigRational::new(numer.into(), denom.into()),
            BigRational::zero(),
        ))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::Exact(ExactComplex::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        ))
    }

    pub fn exact(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact(ExactComplex::new(re, im))
    }

    pub fn approx(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn from_c64(z: Complex64) -> Self {
        Scalar::Approx(z)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// True only for a value that is zero in its own representation.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(z) => z.is_zero(),
            Scalar::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Exact(z) => Complex64::new(rat_to_f64(&z.re), rat_to_f64(&z.im)),
            Scalar::Approx(z) => *z,
        }
    }

    /// Drops exactness.
    pub fn to_approx(&self) -> Scalar {
        Scalar::Approx(self.to_c64())
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(z.conj()),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    /// |z|², exact when possible.
    pub fn norm_sqr(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(ExactComplex::new(z.norm_sqr(), BigRational::zero())),
            Scalar::Approx(z) => Scalar::Approx(Complex64::new(z.norm_sqr(), 0.0)),
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Real part, when it is exact; `None` for approximate values.
    pub fn exact_parts(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            Scalar::Exact(z) => Some((&z.re, &z.im)),
            Scalar::Approx(_) => None,
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if b.is_zero() {
                    None
                } else {
                    Some(Scalar::Exact(a / b))
                }
            }
            _ => {
                let b = rhs.to_c64();
                if b.re == 0.0 && b.im == 0.0 {
                    None
                } else {
                    Some(Scalar::Approx(self.to_c64() / b))
                }
            }
        }
    }

    /// Agreement within `tol` in absolute value; exact zero distance for two
    /// exact operands.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_c64() - other.to_c64()).norm() <= tol,
        }
    }

    /// Distance as a float; zero exactly for identical exact values.
    pub fn distance(&self, other: &Scalar) -> f64 {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) if a == b => 0.0,
            _ => (self.to_c64() - other.to_c64()).norm(),
        }
    }

    /// Binomial coefficient as an exact integer scalar.
    pub fn binomial(n: usize, k: usize) -> Scalar {
        Scalar::big_int(binomial_big(n, k))
    }

    /// n(n-1)...(n-k+1) as an exact integer scalar.
    pub fn falling(n: usize, k: usize) -> Scalar {
        Scalar::big_int(falling_big(n, k))
    }
}

pub fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn falling_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // numerator and denominator beyond f64 range: scale both down first
    let n_bits = r.numer().bits() as i64;
    let d_bits = r.denom().bits() as i64;
    let shift_n = (n_bits - 900).max(0) as usize;
    let shift_d = (d_bits - 900).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_c64() == other.to_c64(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Approx(z)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::approx(x, 0.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Approx(self.to_c64() $op rhs.to_c64()),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics when dividing an exact value by exact zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                assert!(!b.is_zero(), "exact division by zero");
                Scalar::Exact(a / b)
            }
            _ => Scalar::Approx(self.to_c64() / rhs.to_c64()),
        }
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        &self / rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Approx(a) => Scalar::Approx(-a),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(z) => {
                if z.im.is_zero() {
                    write!(f, "{}", fmt_rational(&z.re))
                } else if z.re.is_zero() {
                    write!(f, "{}i", fmt_rational(&z.im))
                } else {
                    let sign = if z.im.is_negative() { "-" } else { "+" };
                    write!(f, "({} {} {}i)", fmt_rational(&z.re), sign, fmt_rational(&z.im.abs()))
                }
            }
            Scalar::Approx(z) => write!(f, "({} + {}i)", z.re, z.im),
        }
    }
}

/// One real component of a serialized scalar.
#[derive(Clone, Debug, PartialEq)]
pub enum Component {
    Exact(BigRational),
    Approx(f64),
}

impl Component {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Component::Exact(r) => {
                if r.is_integer() {
                    if let Some(n) = r.numer().to_i64() {
                        return serde_json::Value::from(n);
                    }
                }
                serde_json::Value::String(fmt_rational(r))
            }
            Component::Approx(x) => serde_json::Number::from_f64(*x)
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null),
        }
    }

    /// Integers and `"p/q"` strings are exact; other JSON numbers are floats.
    pub fn from_json(v: &serde_json::Value) -> Result<Component, Error> {
        match v {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Component::Exact(BigRational::from_integer(i.into())))
                } else {
                    let x = n.as_f64().ok_or_else(|| Error::Format(format!("bad number {n}")))?;
                    if !x.is_finite() {
                        return Err(Error::Format(format!("non-finite number {n}")));
                    }
                    Ok(Component::Approx(x))
                }
            }
            serde_json::Value::String(s) => Ok(Component::Exact(parse_rational(s)?)),
            other => Err(Error::Format(format!("expected number or rational string, got {other}"))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Format(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl Scalar {
    /// `[re, im]` pair in the interchange format.
    pub fn to_json(&self) -> serde_json::Value {
        let (re, im) = match self {
            Scalar::Exact(z) => (Component::Exact(z.re.clone()), Component::Exact(z.im.clone())),
            Scalar::Approx(z) => (Component::Approx(z.re), Component::Approx(z.im)),
        };
        serde_json::Value::Array(vec![re.to_json(), im.to_json()])
    }

    /// Accepts `[re, im]`, or a bare real component.
    pub fn from_json(v: &serde_json::Value) -> Result<Scalar, Error> {
        let (re, im) = match v {
            serde_json::Value::Array(parts) if parts.len() == 2 => {
                (Component::from_json(&parts[0])?, Component::from_json(&parts[1])?)
            }
            serde_json::Value::Array(parts) => {
                return Err(Error::Format(format!("complex pair needs 2 entries, got {}", parts.len())))
            }
            other => (Component::from_json(other)?, Component::Exact(BigRational::zero())),
        };
        Ok(match (re, im) {
            (Component::Exact(r), Component::Exact(i)) => Scalar::exact(r, i),
            (r, i) => {
                let f = |c: Component| match c {
                    Component::Exact(q) => rat_to_f64(&q),
                    Component::Approx(x) => x,
                };
                Scalar::approx(f(r), f(i))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_is_closed() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::gaussian(2, -1);
        let c = (&a * &b + Scalar::i()) / &b - &a;
        assert!(c.is_exact());
        // (a*b + i)/b - a = i/b = i(2+i)/5 = (-1 + 2i)/5
        assert_eq!(c, Scalar::exact(BigRational::new((-1).into(), 5.into()), BigRational::new(2.into(), 5.into())));
    }

    #[test]
    fn mixed_mode_promotes() {
        let a = Scalar::int(2);
        let b = Scalar::approx(0.5, 0.0);
        let c = &a * &b;
        assert!(!c.is_exact());
        assert_eq!(c.to_c64(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn checked_div_by_zero() {
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_none());
        assert!(Scalar::one().checked_div(&Scalar::approx(0.0, 0.0)).is_none());
    }

    #[test]
    fn json_round_trip_keeps_exactness() {
        let s = Scalar::exact(BigRational::new(3.into(), 7.into()), BigRational::from_integer((-2).into()));
        let v = s.to_json();
        assert_eq!(v, serde_json::json!(["3/7", -2]));
        assert_eq!(Scalar::from_json(&v).unwrap(), s);
        let f = Scalar::from_json(&serde_json::json!([0.25, 1])).unwrap();
        assert!(!f.is_exact());
        assert_eq!(f.to_c64(), Complex64::new(0.25, 1.0));
    }

    #[test]
    fn rejects_bad_rationals() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational(" -4/6 ").unwrap(), BigRational::new((-2).into(), 3.into()));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_big(5, 2), BigInt::from(10));
        assert_eq!(binomial_big(2, 5), BigInt::from(0));
        assert_eq!(falling_big(5, 3), BigInt::from(60));
        assert_eq!(falling_big(3, 0), BigInt::from(1));
    }

    #[test]
    fn huge_rationals_convert() {
        let big = BigInt::from(10).pow(400);
        let r = BigRational::new(big.clone() * 3, big);
        assert!((rat_to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
