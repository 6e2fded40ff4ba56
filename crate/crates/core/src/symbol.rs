//! Symbol coefficients in the shifted basis `(az+b)^j`.

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Square matrix `d[j][p]` = coefficient of `(az+b)^j` in `psi_p`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolMatrix {
    d: Vec<Vec<Scalar>>,
    a: Scalar,
    b: Scalar,
}

impl SymbolMatrix {
    /// Fails with `NotRepresentable` when some `deg psi_p` exceeds the order.
    pub fn new(op: &DiffOp, a: &Scalar, b: &Scalar) -> Result<Self> {
        let order = op.order();
        for (p, psi) in op.symbols().iter().enumerate() {
            if let Some(deg) = psi.degree() {
                if deg > order {
                    return Err(Error::NotRepresentable { index: p, degree: deg, order });
                }
            }
        }
        let grid = BasisCoefficients::new(op, a, b)?;
        let n = order + 1;
        let d = (0..n).map(|j| (0..n).map(|p| grid.get(j, p)).collect()).collect();
        Ok(SymbolMatrix { d, a: a.clone(), b: b.clone() })
    }

    /// Builds the operator with symbols `psi_p = sum_j d[j][p] (az+b)^j`.
    pub fn from_entries(d: Vec<Vec<Scalar>>, a: &Scalar, b: &Scalar) -> Self {
        SymbolMatrix { d, a: a.clone(), b: b.clone() }
    }

    pub fn size(&self) -> usize {
        self.d.len()
    }

    pub fn entry(&self, j: usize, p: usize) -> &Scalar {
        &self.d[j][p]
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.d
    }

    pub fn basis(&self) -> (&Scalar, &Scalar) {
        (&self.a, &self.b)
    }

    pub fn set(&mut self, j: usize, p: usize, value: Scalar) {
        self.d[j][p] = value;
    }

    /// Reassembles the operator from the matrix.
    pub fn to_diffop(&self) -> DiffOp {
        let n = self.d.len();
        let powers: Vec<Poly> = (0..n).map(|j| Poly::linear_power(&self.a, &self.b, j)).collect();
        let symbols = (0..n)
            .map(|p| {
                (0..n).fold(Poly::zero(), |acc, j| &acc + &powers[j].scale(&self.d[j][p]))
            })
            .collect();
        DiffOp::new(symbols)
    }
}

/// Rectangular version used by the adjoint and conjugation transforms:
/// rows run over powers `l = 0..=max degree`, columns over symbol index.
#[derive(Clone, Debug)]
pub(crate) struct BasisCoefficients {
    rows: Vec<Vec<Scalar>>,
    cols: usize,
}

impl BasisCoefficients {
    pub(crate) fn new(op: &DiffOp, a: &Scalar, b: &Scalar) -> Result<Self> {
        let cols = op.symbols().len();
        let nrows = op.max_degree() + 1;
        let mut rows = vec![vec![Scalar::zero(); cols]; nrows];
        for (p, psi) in op.symbols().iter().enumerate() {
            for (l, c) in psi.rebase(a, b)?.into_iter().enumerate() {
                rows[l][p] = c;
            }
        }
        // rebase validates a even for the zero operator
        if cols == 0 {
            Poly::zero().rebase(a, b)?;
        }
        Ok(BasisCoefficients { rows, cols })
    }

    pub(crate) fn get(&self, l: usize, p: usize) -> Scalar {
        if p < self.cols {
            self.rows.get(l).map(|r| r[p].clone()).unwrap_or_else(Scalar::zero)
        } else {
            Scalar::zero()
        }
    }

    pub(crate) fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn ncols(&self) -> usize {
        self.cols
    }
}
