//! Coefficient functions of the adjoint acting on kernel derivatives.
//!
//! `(T f)^(l)(z) = sum_j omega[j][l](z) f^(j)(z)`, so that
//! `T* K_z^[m] = sum_j conj(omega[j][m](z)) K_z^[j]`.

use crate::diffop::DiffOp;
use crate::poly::Poly;

/// Rows `l = 0..=m`; row `l` has `kappa + l + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaTable {
    rows: Vec<Vec<Poly>>,
}

impl OmegaTable {
    pub fn new(op: &DiffOp, m: usize) -> Self {
        let kappa = op.order();
        let first: Vec<Poly> = (0..=kappa).map(|j| op.symbol(j)).collect();
        let mut rows = vec![first];
        for l in 1..=m {
            let prev = &rows[l - 1];
            let width = kappa + l + 1;
            let row: Vec<Poly> = (0..width)
                .map(|j| {
                    if j == 0 {
                        prev[0].derivative()
                    } else if j == kappa + l {
                        prev[kappa + l - 1].clone()
                    } else {
                        &prev[j].derivative() + &prev[j - 1]
                    }
                })
                .collect();
            rows.push(row);
        }
        OmegaTable { rows }
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `omega[j][l]`; zero outside the table.
    pub fn get(&self, j: usize, l: usize) -> Poly {
        self.rows.get(l).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }

    pub fn row(&self, l: usize) -> &[Poly] {
        &self.rows[l]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn derivative_first_row() {
        let t = OmegaTable::new(&DiffOp::derivative(), 1);
        assert_eq!(t.row(1), &[Poly::zero(), Poly::zero(), Poly::from_ints(&[1])]);
    }

    #[test]
    fn base_row_is_symbols() {
        let op = DiffOp::from_int_rows(&[&[1, 2], &[0, 0, 3], &[5]]);
        let t = OmegaTable::new(&op, 0);
        assert_eq!(t.row(0), op.symbols());
    }

    #[test]
    fn multiplication_by_z_first_row() {
        let t = OmegaTable::new(&DiffOp::multiply_by_z(), 1);
        assert_eq!(t.row(1), &[Poly::from_ints(&[1]), Poly::from_ints(&[0, 1])]);
    }

    #[test]
    fn rows_reproduce_higher_derivatives() {
        // (Tf)^(l)(z) computed directly against the table at a sample point
        let op = DiffOp::from_int_rows(&[&[1, -2, 1], &[0, 3], &[2, 0, 0, 1]]);
        let f = Poly::from_ints(&[3, -1, 4, 1, -5, 9, 2]);
        let t = OmegaTable::new(&op, 4);
        let z = Scalar::gaussian(1, -2);
        for l in 0..=4 {
            let direct = op.apply(&f).nth_derivative(l).eval(&z);
            let via: Scalar = t.row(l).iter().enumerate().map(|(j, w)| w.eval(&z) * f.nth_derivative(j).eval(&z)).sum();
            assert_eq!(direct, via, "row {l}");
        }
    }
}
