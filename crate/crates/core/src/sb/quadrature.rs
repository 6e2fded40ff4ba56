//! Gauss–Hermite rules for `int f(x) e^{-x^2} dx`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_NODES: usize = 128;
pub const MIN_NODES: usize = 16;

#[derive(Clone, Debug)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Orthonormal Hermite values `(p_n(x), p_{n-1}(x))`.
fn orthonormal_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p1 = std::f64::consts::PI.powf(-0.25);
    let mut p2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = x * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, p2)
}

impl GaussHermite {
    /// Eigenvalues of the Jacobi matrix, then a few Newton steps on `p_n`.
    pub fn compute(n: usize) -> Result<Self> {
        if n < MIN_NODES {
            return Err(Error::InvalidNodes(n));
        }
        let jacobi = DMatrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { (i.max(j) as f64 / 2.0).sqrt() } else { 0.0 });
        let mut nodes: Vec<f64> = jacobi.symmetric_eigen().eigenvalues.iter().copied().collect();
        nodes.sort_by(f64::total_cmp);
        let mut weights = Vec::with_capacity(n);
        let scale = (2.0 * n as f64).sqrt();
        for x in &mut nodes {
            for _ in 0..4 {
                let (p, q) = orthonormal_pair(n, *x);
                let step = p / (scale * q);
                *x -= step;
                if step.abs() <= 1e-15 * (1.0 + x.abs()) {
                    break;
                }
            }
            let pp = scale * orthonormal_pair(n, *x).1;
            weights.push(2.0 / (pp * pp));
        }
        Ok(GaussHermite { nodes, weights })
    }

    /// The shared rule with `n` nodes, computed on first use.
    pub fn shared(n: usize) -> Result<Arc<GaussHermite>> {
        static TABLES: OnceLock<Mutex<HashMap<usize, Arc<GaussHermite>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rule) = tables.lock().expect("quadrature table lock").get(&n) {
            return Ok(rule.clone());
        }
        let rule = Arc::new(GaussHermite::compute(n)?);
        Ok(tables.lock().expect("quadrature table lock").entry(n).or_insert(rule).clone())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `int f(x) e^{-x^2} dx`.
    pub fn integrate(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| f(x) * w).sum()
    }
}
