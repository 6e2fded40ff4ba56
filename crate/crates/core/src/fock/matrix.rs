//! Finite sections `M[m][n] = <T e_n, e_m>` in the orthonormal basis
//! `e_n = z^n / sqrt(n!)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::diffop::DiffOp;

fn falling(n: usize, k: usize) -> f64 {
    ((n + 1 - k)..=n).map(|t| t as f64).product()
}

#[derive(Clone, Debug, PartialEq)]
pub struct FockMatrix {
    pub matrix: DMatrix<Complex64>,
    /// Nonzero diagonals below the main one (`m > n`).
    pub below: usize,
    /// Nonzero diagonals above the main one (`m < n`), at most the order.
    pub above: usize,
    /// Columns `0..exact_columns` carry no truncation loss.
    pub exact_columns: usize,
}

impl FockMatrix {
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.matrix[(m, n)]
    }
}

/// The term `c z^s d^p` sends `e_n` to `c sqrt(F(n,p) F(m,s)) e_m`,
/// `m = n - p + s`, with `F` the falling factorial.
pub fn fock_matrix(op: &DiffOp, n: usize) -> FockMatrix {
    let mut matrix = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    let mut below = 0usize;
    let mut above = 0usize;
    for (s, p, c) in op.monomial_terms() {
        let c = c.to_c64();
        if s > p {
            below = below.max(s - p);
        } else {
            above = above.max(p - s);
        }
        for col in p..n {
            let row = col - p + s;
            if row >= n {
                break;
            }
            let weight = if s == p { falling(col, p) } else { falling(col, p).sqrt() * falling(row, s).sqrt() };
            matrix[(row, col)] += c * weight;
        }
    }
    let exact_columns = n.saturating_sub(op.max_degree());
    FockMatrix { matrix, below, above, exact_columns }
}
