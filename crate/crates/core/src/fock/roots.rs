//! Polynomial zeros with multiplicities.
//!
//! Exact polynomials go through a square-free decomposition, so their
//! multiplicities are exact; linear factors give exact roots. Approximate
//! polynomials use closed forms up to degree two, otherwise companion
//! eigenvalues, clustering, Newton polishing on the matching derivative and
//! a derivative test at [`MULTIPLICITY_TOL`].

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::poly::Poly;
use crate::scalar::Scalar;

pub const MULTIPLICITY_TOL: f64 = 1e-8;
const CLUSTER_TOL: f64 = 1e-4;

#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub value: Scalar,
    pub multiplicity: usize,
}

/// Zeros of `p` with multiplicity; empty for constants (including zero).
pub fn roots(p: &Poly) -> Vec<Root> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = if p.is_exact() { exact_roots(p) } else { approx_roots(p) };
    out.sort_by(|x, y| {
        let (a, b) = (x.value.to_c64(), y.value.to_c64());
        a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
    });
    out
}

/// Yun's square-free factorization; factor `i` collects the zeros of
/// multiplicity `i + 1`.
fn square_free_factors(p: &Poly) -> Vec<Poly> {
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).expect("nonzero").0;
    let c = dp.div_rem(&a0).expect("nonzero").0;
    let mut d = &c - &b.derivative();
    let mut factors = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).expect("nonzero").0;
        let next_c = d.div_rem(&a).expect("nonzero").0;
        d = &next_c - &next_b.derivative();
        b = next_b;
        factors.push(a);
    }
    factors
}

fn exact_roots(p: &Poly) -> Vec<Root> {
    let mut out = Vec::new();
    for (i, factor) in square_free_factors(p).iter().enumerate() {
        let multiplicity = i + 1;
        match factor.degree() {
            Some(0) | None => {}
            Some(1) => {
                let f = factor.monic();
                out.push(Root { value: -f.coeff(0), multiplicity });
            }
            Some(_) => {
                // square-free: every numeric zero is simple
                for r in approx_simple_roots(&factor.to_approx()) {
                    out.push(Root { value: Scalar::from_c64(r), multiplicity });
                }
            }
        }
    }
    out
}

fn c64_coeffs(p: &Poly) -> Vec<Complex64> {
    p.coeffs().iter().map(Scalar::to_c64).collect()
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, x| acc * z + x)
}

/// Evaluation scale `sum |c_k| |z|^k` for relative tests.
fn magnitude(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, x| acc * r + x.norm())
}

fn derivative_coeffs(c: &[Complex64]) -> Vec<Complex64> {
    c.iter().enumerate().skip(1).map(|(k, x)| x * k as f64).collect()
}

fn newton(c: &[Complex64], mut z: Complex64) -> Complex64 {
    let dc = derivative_coeffs(c);
    for _ in 0..60 {
        let d = horner(&dc, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = horner(c, z) / d;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn companion_eigenvalues(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d];
    let mut m = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
    for i in 1..d {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / lead;
    }
    let schur = m.schur();
    let (_, t) = schur.unpack();
    (0..d).map(|i| t[(i, i)]).collect()
}

fn quadratic(c: &[Complex64]) -> (Complex64, Complex64, f64) {
    let (c0, c1, c2) = (c[0], c[1], c[2]);
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let s = disc.sqrt();
    // avoid cancellation
    let q = if (c1.conj() * s).re >= 0.0 { -(c1 + s) / 2.0 } else { -(c1 - s) / 2.0 };
    let scale = c1.norm_sqr() + (4.0 * c2 * c0).norm();
    let rel = if scale == 0.0 { 0.0 } else { disc.norm() / scale };
    if q.norm() == 0.0 {
        return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), rel);
    }
    (q / c2, c0 / q, rel)
}

fn approx_simple_roots(p: &Poly) -> Vec<Complex64> {
    let c = c64_coeffs(p);
    match c.len() - 1 {
        1 => vec![-c[0] / c[1]],
        2 => {
            let (r1, r2, _) = quadratic(&c);
            vec![newton(&c, r1), newton(&c, r2)]
        }
        _ => companion_eigenvalues(&c).into_iter().map(|r| newton(&c, r)).collect(),
    }
}

/// Does `z` look like a zero of order exactly `k`?
fn has_order(c: &[Complex64], z: Complex64, k: usize) -> bool {
    let mut d = c.to_vec();
    for _ in 0..k {
        if horner(&d, z).norm() > MULTIPLICITY_TOL * magnitude(&d, z).max(f64::MIN_POSITIVE) {
            return false;
        }
        d = derivative_coeffs(&d);
    }
    horner(&d, z).norm() > MULTIPLICITY_TOL * magnitude(&d, z)
}

fn approx_roots(p: &Poly) -> Vec<Root> {
    let c = c64_coeffs(p);
    let degree = c.len() - 1;
    if degree == 1 {
        return vec![Root { value: Scalar::from_c64(-c[0] / c[1]), multiplicity: 1 }];
    }
    let raw = if degree == 2 {
        let (r1, r2, rel) = quadratic(&c);
        if rel <= MULTIPLICITY_TOL {
            let w = -c[1] / (2.0 * c[2]);
            return vec![Root { value: Scalar::from_c64(w), multiplicity: 2 }];
        }
        vec![r1, r2]
    } else {
        companion_eigenvalues(&c)
    };
    // cluster nearby eigenvalues
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for r in raw {
        match clusters.iter_mut().find(|cl| (cl[0] - r).norm() <= CLUSTER_TOL * (1.0 + r.norm())) {
            Some(cl) => cl.push(r),
            None => clusters.push(vec![r]),
        }
    }
    let mut out = Vec::new();
    for cl in clusters {
        let k = cl.len();
        let mean = cl.iter().sum::<Complex64>() / k as f64;
        let mut d = c.clone();
        for _ in 1..k {
            d = derivative_coeffs(&d);
        }
        let w = newton(&d, mean);
        if has_order(&c, w, k) {
            out.push(Root { value: Scalar::from_c64(w), multiplicity: k });
        } else {
            for r in cl {
                out.push(Root { value: Scalar::from_c64(newton(&c, r)), multiplicity: 1 });
            }
        }
    }
    out
}

/// Multiplicity of `w` as a zero of `p`: exact for exact data, otherwise by
/// the derivative test.
pub fn zero_order(p: &Poly, w: &Scalar) -> usize {
    if p.is_zero() {
        return usize::MAX;
    }
    if p.is_exact() && w.is_exact() {
        let mut d = p.clone();
        let mut k = 0;
        while d.eval(w).is_zero() {
            d = d.derivative();
            k += 1;
        }
        return k;
    }
    let c = c64_coeffs(p);
    let z = w.to_c64();
    (0..c.len()).find(|&k| has_order(&c, z, k)).unwrap_or(c.len())
}
