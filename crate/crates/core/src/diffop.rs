//! Linear differential expressions `D[psi] f = sum_j psi_j f^(j)` with
//! polynomial symbols.

use std::fmt;

use crate::poly::Poly;
use crate::scalar::Scalar;

/// Symbols `psi_0, ..., psi_kappa`. Trailing zero symbols are dropped, so
/// the order is the index of the last nonzero symbol and two operators are
/// equal iff their symbol lists are.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiffOp {
    symbols: Vec<Poly>,
}

impl DiffOp {
    pub fn new(symbols: Vec<Poly>) -> Self {
        let mut op = DiffOp { symbols };
        while op.symbols.last().is_some_and(Poly::is_zero) {
            op.symbols.pop();
        }
        op
    }

    pub fn zero() -> Self {
        DiffOp { symbols: Vec::new() }
    }

    pub fn identity() -> Self {
        DiffOp::new(vec![Poly::constant(Scalar::one())])
    }

    /// Multiplication by `c`.
    pub fn scalar(c: Scalar) -> Self {
        DiffOp::new(vec![Poly::constant(c)])
    }

    /// The operator `d/dz`.
    pub fn derivative() -> Self {
        DiffOp::new(vec![Poly::zero(), Poly::constant(Scalar::one())])
    }

    /// Multiplication by `z`.
    pub fn multiply_by_z() -> Self {
        DiffOp::new(vec![Poly::from_ints(&[0, 1])])
    }

    /// `1 + 2 z d/dz`, the oscillator in Fock-space form.
    pub fn oscillator() -> Self {
        DiffOp::new(vec![Poly::from_ints(&[1]), Poly::from_ints(&[0, 2])])
    }

    /// `psi_0 + psi_n d^n/dz^n`.
    pub fn two_term(psi0: Poly, psi_n: Poly, n: usize) -> Self {
        let mut symbols = vec![Poly::zero(); n + 1];
        symbols[0] = psi0;
        if n == 0 {
            symbols[0] = &symbols[0] + &psi_n;
        } else {
            symbols[n] = psi_n;
        }
        DiffOp::new(symbols)
    }

    /// Builds from integer coefficient rows, one row per symbol.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        DiffOp::new(rows.iter().map(|r| Poly::from_ints(r)).collect())
    }

    pub fn symbols(&self) -> &[Poly] {
        &self.symbols
    }

    /// `psi_j`, zero past the order.
    pub fn symbol(&self, j: usize) -> Poly {
        self.symbols.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Order kappa; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.symbols.len().saturating_sub(1)
    }

    /// Largest symbol degree (0 for the zero operator).
    pub fn max_degree(&self) -> usize {
        self.symbols.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    /// `max_j (deg psi_j - j)`, the largest degree increase the operator
    /// can produce; may be negative.
    pub fn degree_shift(&self) -> isize {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.degree().map(|d| d as isize - j as isize))
            .max()
            .unwrap_or(0)
    }

    pub fn is_exact(&self) -> bool {
        self.symbols.iter().all(Poly::is_exact)
    }

    pub fn to_approx(&self) -> DiffOp {
        DiffOp::new(self.symbols.iter().map(Poly::to_approx).collect())
    }

    /// `(D[psi] f)(z) = sum_j psi_j(z) f^(j)(z)`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.symbols
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (j, psi)| &acc + &(psi * &f.nth_derivative(j)))
    }

    pub fn scale(&self, c: &Scalar) -> DiffOp {
        DiffOp::new(self.symbols.iter().map(|p| p.scale(c)).collect())
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.symbols.len().max(other.symbols.len());
        DiffOp::new((0..n).map(|j| &self.symbol(j) + &other.symbol(j)).collect())
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        let n = self.symbols.len().max(other.symbols.len());
        DiffOp::new((0..n).map(|j| &self.symbol(j) - &other.symbol(j)).collect())
    }

    /// Symbolwise comparison within `tol`; exact coefficients compare exactly.
    pub fn approx_eq(&self, other: &DiffOp, tol: f64) -> bool {
        let n = self.symbols.len().max(other.symbols.len());
        (0..n).all(|j| self.symbol(j).approx_eq(&other.symbol(j), tol))
    }

    pub fn max_distance(&self, other: &DiffOp) -> f64 {
        let n = self.symbols.len().max(other.symbols.len());
        (0..n).map(|j| self.symbol(j).max_distance(&other.symbol(j))).fold(0.0, f64::max)
    }

    /// Coefficient `alpha[j][p]` of `z^j d^p`, read off the plain z basis.
    pub fn monomial_terms(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (p, psi) in self.symbols.iter().enumerate() {
            for (j, c) in psi.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((j, p, c.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(j, p)| match j {
                0 => format!("[{p}]"),
                1 => format!("[{p}]d"),
                _ => format!("[{p}]d^{j}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
