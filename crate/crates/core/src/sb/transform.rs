//! Moving operators across the Segal–Bargmann transform `U`.
//!
//! `U^{-1} z U = (X - iP)/sqrt(2)` and `U^{-1} d U = (X + iP)/sqrt(2)`, so a
//! Fock monomial `z^j d^p` lands on a product of linear forms in `(X, P)`.
//! Conversely `x = (z + d)/sqrt(2)` and `D = (d - z)/sqrt(2)` after
//! conjugating back.

use std::collections::HashMap;

use super::l2op::L2Op;
use super::surd::Surd;
use super::weyl::{normal_product, xp_to_l2, NormalForm};
use crate::diffop::DiffOp;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Normal-ordered powers of one linear form under `BA = AB + h`.
struct Powers {
    base: NormalForm,
    h: Scalar,
    cache: HashMap<usize, NormalForm>,
}

impl Powers {
    fn new(a: Scalar, b: Scalar, h: Scalar) -> Self {
        let base = NormalForm::from([((1, 0), Surd::from(a)), ((0, 1), Surd::from(b))]);
        Powers { base, h, cache: HashMap::from([(0, NormalForm::from([((0, 0), Surd::one())]))]) }
    }

    fn get(&mut self, k: usize) -> NormalForm {
        if let Some(hit) = self.cache.get(&k) {
            return hit.clone();
        }
        let prev = self.get(k - 1);
        let next = normal_product(&prev, &self.base, &self.h);
        self.cache.insert(k, next.clone());
        next
    }
}

fn accumulate(out: &mut NormalForm, form: &NormalForm, c: &Surd) {
    for (k, v) in form {
        super::weyl::add_term(out, *k, c * v);
    }
}

/// The `L^2(R)` operator `U^{-1} op U`.
pub fn fock_to_lebesgue(op: &DiffOp) -> L2Op {
    let h = -Scalar::i();
    let mut lower = Powers::new(Scalar::one(), -Scalar::i(), h.clone());
    let mut raise = Powers::new(Scalar::one(), Scalar::i(), h.clone());
    let mut xp = NormalForm::new();
    for (j, p, alpha) in op.monomial_terms() {
        let word = normal_product(&lower.get(j), &raise.get(p), &h);
        accumulate(&mut xp, &word, &Surd::inv_sqrt2_pow(j + p).scale(&alpha));
    }
    xp_to_l2(&xp)
}

/// The Fock operator `U L U^{-1}`.
pub fn lebesgue_to_fock(l2op: &L2Op) -> DiffOp {
    let h = Scalar::one();
    let mut position = Powers::new(Scalar::one(), Scalar::one(), h.clone());
    let mut derivative = Powers::new(Scalar::int(-1), Scalar::one(), h.clone());
    let mut fock = NormalForm::new();
    for (&(m, q), c) in l2op.form() {
        let word = normal_product(&position.get(m), &derivative.get(q), &h);
        accumulate(&mut fock, &word, &(c * &Surd::inv_sqrt2_pow(m + q)));
    }
    let order = fock.keys().map(|k| k.1).max().unwrap_or(0);
    let mut rows: Vec<Vec<Scalar>> = vec![Vec::new(); order + 1];
    for ((s, p), c) in fock {
        let row = &mut rows[p];
        if row.len() <= s {
            row.resize(s + 1, Scalar::zero());
        }
        row[s] = c.to_scalar();
    }
    DiffOp::new(rows.into_iter().map(Poly::new).collect())
}
