//! Truncated power series in the monomial basis with the Fock inner
//! product `<f, g> = sum_n f_n conj(g_n) n!`.

use num_complex::Complex64;

use crate::poly::Poly;
use crate::scalar::Scalar;

/// `ln n!`, accumulated term by term.
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `ln 0!, ..., ln (len-1)!`.
pub(crate) fn ln_factorials(len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    let mut acc = 0.0;
    for n in 0..len {
        if n > 1 {
            acc += (n as f64).ln();
        }
        out.push(acc);
    }
    out
}

/// Sums `exp(logs[i]) * phases[i]` with a common scale so that the
/// individual terms never overflow.
fn scaled_sum(terms: impl Iterator<Item = (f64, Complex64)>) -> Complex64 {
    let terms: Vec<(f64, Complex64)> = terms.collect();
    let Some(top) = terms.iter().map(|t| t.0).reduce(f64::max) else {
        return Complex64::new(0.0, 0.0);
    };
    let sum: Complex64 = terms.iter().map(|&(l, ph)| ph * (l - top).exp()).sum();
    sum * top.exp()
}

/// Coefficients `f_0, ..., f_{N-1}` of a function truncated at `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockSeries {
    coeffs: Vec<Complex64>,
}

impl FockSeries {
    /// Pads with zeros or truncates to exactly `n` coefficients.
    pub fn new(mut coeffs: Vec<Complex64>, n: usize) -> Self {
        coeffs.resize(n, Complex64::new(0.0, 0.0));
        FockSeries { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        FockSeries::new(Vec::new(), n)
    }

    pub fn monomial(k: usize, n: usize) -> Self {
        let mut s = FockSeries::zero(n);
        if k < n {
            s.coeffs[k] = Complex64::new(1.0, 0.0);
        }
        s
    }

    pub fn from_poly(p: &Poly, n: usize) -> Self {
        FockSeries::new(p.coeffs().iter().map(Scalar::to_c64).collect(), n)
    }

    /// From coordinates in the orthonormal basis `e_k = z^k / sqrt(k!)`.
    pub fn from_orthonormal(b: &[Complex64], n: usize) -> Self {
        let lf = ln_factorials(b.len());
        FockSeries::new(b.iter().zip(&lf).map(|(c, l)| c * (-0.5 * l).exp()).collect(), n)
    }

    pub fn to_orthonormal(&self) -> Vec<Complex64> {
        let lf = ln_factorials(self.len());
        self.coeffs.iter().zip(&lf).map(|(c, l)| c * (0.5 * l).exp()).collect()
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_c64(&self.coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// The truncation `N`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    pub fn truncated(&self, n: usize) -> FockSeries {
        FockSeries::new(self.coeffs.clone(), n)
    }

    pub fn scale(&self, c: Complex64) -> FockSeries {
        FockSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Sum, padded to the longer truncation.
    pub fn add(&self, other: &FockSeries) -> FockSeries {
        let n = self.len().max(other.len());
        FockSeries { coeffs: (0..n).map(|k| self.get(k) + other.get(k)).collect() }
    }

    pub fn sub(&self, other: &FockSeries) -> FockSeries {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn norm_sqr(&self) -> f64 {
        inner_product(self, self).re
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().max(0.0).sqrt()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// The `k`-th derivative, keeping the truncation.
    pub fn nth_derivative(&self, k: usize) -> FockSeries {
        let n = self.len();
        let coeffs = (0..n)
            .map(|j| {
                let src = j + k;
                if src >= n {
                    return Complex64::new(0.0, 0.0);
                }
                let falling: f64 = ((j + 1)..=src).map(|t| t as f64).product();
                self.coeffs[src] * falling
            })
            .collect();
        FockSeries { coeffs }
    }
}

/// `<f, g> = sum_n f_n conj(g_n) n!`; the shorter series is zero-padded.
pub fn inner_product(f: &FockSeries, g: &FockSeries) -> Complex64 {
    let len = f.len().min(g.len());
    let lf = ln_factorials(len);
    scaled_sum((0..len).filter_map(|n| {
        let (a, b) = (f.coeffs[n], g.coeffs[n]);
        let (ra, rb) = (a.norm(), b.norm());
        (ra > 0.0 && rb > 0.0).then(|| (ra.ln() + rb.ln() + lf[n], (a / ra) * (b / rb).conj()))
    }))
}

/// Exact Fock inner product of two polynomials.
pub fn poly_inner_product(f: &Poly, g: &Poly) -> Scalar {
    f.coeffs()
        .iter()
        .zip(g.coeffs())
        .enumerate()
        .map(|(n, (a, b))| a * &b.conj() * Scalar::falling(n, n))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn monomials_are_orthogonal() {
        let z = FockSeries::monomial(1, 8);
        assert_eq!(inner_product(&z, &z), c(1.0));
        assert_eq!(inner_product(&FockSeries::monomial(2, 8), &FockSeries::monomial(3, 8)), c(0.0));
        let z5 = FockSeries::monomial(5, 8);
        assert!((inner_product(&z5, &z5) - c(120.0)).norm() < 1e-12);
    }

    #[test]
    fn large_degree_norm_does_not_overflow() {
        // z^200 has squared norm 200!, far beyond f64 range only after 170
        let mut v = vec![Complex64::new(0.0, 0.0); 201];
        v[200] = (-0.5 * ln_factorial(200)).exp().into();
        let s = FockSeries::new(v, 201);
        assert!((s.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn orthonormal_round_trip() {
        let b: Vec<Complex64> = (0..30).map(|k| Complex64::new(k as f64, -1.0)).collect();
        let s = FockSeries::from_orthonormal(&b, 30);
        let back = s.to_orthonormal();
        for (x, y) in b.iter().zip(&back) {
            assert!((x - y).norm() < 1e-9 * (1.0 + x.norm()));
        }
        let expected: f64 = b.iter().map(|x| x.norm_sqr()).sum();
        assert!((s.norm_sqr() - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn exact_inner_product() {
        let f = Poly::from_ints(&[1, 2, 3]);
        let g = Poly::new(vec![Scalar::i(), Scalar::one(), Scalar::int(1)]);
        // 1*(-i)*1 + 2*1*1 + 3*1*2
        assert_eq!(poly_inner_product(&f, &g), Scalar::gaussian(8, -1));
    }

    #[test]
    fn derivatives() {
        let s = FockSeries::new(vec![c(1.0), c(1.0), c(1.0), c(1.0)], 4);
        assert_eq!(s.nth_derivative(2).coeffs(), &[c(2.0), c(6.0), c(0.0), c(0.0)]);
    }
}
