//! Words in two generators `A`, `B` with `BA = AB + h` and their normal
//! ordering (all `A` left of all `B`).
//!
//! On `L^2(R)` the generators are `X` and `P = -i d/dx`, with `PX = XP - i`.
//! On the Fock side they are multiplication by `z` and `d/dz`, with
//! `d z = z d + 1`.

use std::collections::{BTreeMap, HashMap};

use super::l2op::L2Op;
use super::surd::Surd;
use crate::scalar::Scalar;

/// Normal-ordered form: `(a_power, b_power) -> coefficient`.
pub type NormalForm = BTreeMap<(usize, usize), Surd>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    P,
}

/// `coeff * letters[0] letters[1] ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylWord {
    pub coeff: Scalar,
    pub letters: Vec<Letter>,
}

impl WeylWord {
    pub fn new(coeff: Scalar, letters: Vec<Letter>) -> Self {
        WeylWord { coeff, letters }
    }

    /// Parses letters such as `"PXX"`; other characters are rejected.
    pub fn parse(coeff: Scalar, s: &str) -> Option<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'X' => Some(Letter::X),
                'P' => Some(Letter::P),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(WeylWord { coeff, letters })
    }

    /// Concatenation.
    pub fn mul(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { coeff: &self.coeff * &other.coeff, letters }
    }
}

pub(crate) fn add_term(form: &mut NormalForm, key: (usize, usize), c: Surd) {
    if c.is_zero() {
        return;
    }
    let entry = form.entry(key).or_default();
    *entry = &*entry + &c;
    if entry.is_zero() {
        form.remove(&key);
    }
}

/// Single-swap rewriting `BA -> AB + h` with memoized results per word
/// (`false` is `A`, `true` is `B`). Each step lowers the inversion count or
/// the length, so the recursion terminates.
pub struct Rewriter {
    h: Scalar,
    memo: HashMap<Vec<bool>, BTreeMap<(usize, usize), Scalar>>,
}

impl Rewriter {
    pub fn new(h: Scalar) -> Self {
        Rewriter { h, memo: HashMap::new() }
    }

    /// The `(X, P)` relation `PX = XP - i`.
    pub fn position_momentum() -> Self {
        Rewriter::new(-Scalar::i())
    }

    /// The Fock relation `d z = z d + 1`.
    pub fn fock() -> Self {
        Rewriter::new(Scalar::one())
    }

    pub fn normal(&mut self, word: &[bool]) -> BTreeMap<(usize, usize), Scalar> {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let result = match word.windows(2).position(|p| p[0] && !p[1]) {
            None => {
                let b = word.iter().filter(|&&x| x).count();
                BTreeMap::from([((word.len() - b, b), Scalar::one())])
            }
            Some(i) => {
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.normal(&swapped);
                let removed: Vec<bool> = word[..i].iter().chain(&word[i + 2..]).copied().collect();
                for (key, c) in self.normal(&removed) {
                    let e = out.entry(key).or_insert_with(Scalar::zero);
                    *e += &(&c * &self.h);
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
        };
        self.memo.insert(word.to_vec(), result.clone());
        result
    }

    /// Normal form of `sum coeff_i * word_i`.
    pub fn normal_sum<'a>(&mut self, words: impl IntoIterator<Item = (Surd, &'a [bool])>) -> NormalForm {
        let mut out = NormalForm::new();
        for (coeff, word) in words {
            for (key, c) in self.normal(word) {
                add_term(&mut out, key, coeff.scale(&c));
            }
        }
        out
    }
}

/// Closed-form product of normal forms:
/// `B^q A^m = sum_k C(q,k) C(m,k) k! h^k A^(m-k) B^(q-k)`.
pub fn normal_product(lhs: &NormalForm, rhs: &NormalForm, h: &Scalar) -> NormalForm {
    let mut out = NormalForm::new();
    for (&(m1, q1), c1) in lhs {
        for (&(m2, q2), c2) in rhs {
            let c = c1 * c2;
            for k in 0..=q1.min(m2) {
                let w = Scalar::binomial(q1, k) * Scalar::falling(m2, k) * h.pow(k as u32);
                add_term(&mut out, (m1 + m2 - k, q1 + q2 - k), c.scale(&w));
            }
        }
    }
    out
}

/// Normal form in `X^m P^q`.
pub fn weyl_normal_order_xp(expr: &[WeylWord]) -> NormalForm {
    let mut rw = Rewriter::position_momentum();
    let words: Vec<(Surd, Vec<bool>)> =
        expr.iter().map(|w| (Surd::from(w.coeff.clone()), w.letters.iter().map(|l| *l == Letter::P).collect())).collect();
    rw.normal_sum(words.iter().map(|(c, w)| (c.clone(), w.as_slice())))
}

/// `X^m P^q = (-i)^q x^m D^q`.
pub fn xp_to_l2(form: &NormalForm) -> L2Op {
    let minus_i = -Scalar::i();
    L2Op::from_form(form.iter().map(|(&(m, q), c)| ((m, q), c.scale(&minus_i.pow(q as u32)))).collect())
}

/// Canonical `sum c x^m D^q` of a sum of words.
pub fn weyl_normal_order(expr: &[WeylWord]) -> L2Op {
    xp_to_l2(&weyl_normal_order_xp(expr))
}
