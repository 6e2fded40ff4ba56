//! Kernel functions `K_z^[m](u) = u^m e^{u conj(z)}` and the adjoint acting
//! on them.

use num_complex::Complex64;

use super::series::{inner_product, FockSeries};
use crate::diffop::DiffOp;
use crate::omega::OmegaTable;

#[derive(Clone, Debug, PartialEq)]
pub struct KernelVector {
    pub z: Complex64,
    pub m: usize,
    pub series: FockSeries,
}

impl KernelVector {
    /// Coefficient of `u^k` is `conj(z)^(k-m) / (k-m)!` for `k >= m`.
    pub fn new(z: Complex64, m: usize, n: usize) -> Self {
        let w = z.conj();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        let mut term = Complex64::new(1.0, 0.0);
        for (j, slot) in coeffs.iter_mut().enumerate().skip(m) {
            if j > m {
                term = term * w / (j - m) as f64;
            }
            *slot = term;
        }
        KernelVector { z, m, series: FockSeries::new(coeffs, n) }
    }

    /// `<f, K_z^[m]>`, which equals `f^(m)(z)` for polynomials below the
    /// truncation.
    pub fn reproduce(&self, f: &FockSeries) -> Complex64 {
        inner_product(f, &self.series)
    }
}

/// `T* K_z^[m] = sum_j conj(omega[j][m](z)) K_z^[j]`, realized at truncation `n`.
pub fn adjoint_on_kernel(op: &DiffOp, z: Complex64, m: usize, n: usize) -> FockSeries {
    let table = OmegaTable::new(op, m);
    let mut out = FockSeries::zero(n);
    for (j, w) in table.row(m).iter().enumerate() {
        let c = w.eval_c64(z).conj();
        if c.norm() == 0.0 {
            continue;
        }
        out = out.add(&KernelVector::new(z, j, n).series.scale(c));
    }
    out
}
