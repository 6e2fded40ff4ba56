//! Properties of the Segal–Bargmann dictionary.

use fockcalc_core::fock::{spectrum, SpectrumKind, SpectrumOptions};
use fockcalc_core::sb::{
    fock_to_lebesgue, lebesgue_to_fock, normal_product, sb_pair_integral, weyl_normal_order, weyl_normal_order_xp, L2Op, Letter, WeylWord,
};
use fockcalc_core::{DiffOp, Poly, Scalar};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

fn small_op() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, -3i64..=3), 0..=4), 1..=4)
        .prop_map(|rows| DiffOp::new(rows.into_iter().map(|r| Poly::new(r.into_iter().map(|(a, b)| Scalar::gaussian(a, b)).collect())).collect()))
}

fn small_l2() -> impl Strategy<Value = L2Op> {
    prop::collection::vec((0usize..=3, 0usize..=3, -3i64..=3, -3i64..=3), 0..=6)
        .prop_map(|t| L2Op::new(t.into_iter().map(|(m, q, a, b)| (m, q, Scalar::gaussian(a, b)))))
}

fn word() -> impl Strategy<Value = WeylWord> {
    (prop::collection::vec(any::<bool>(), 0..=6), -3i64..=3, -3i64..=3).prop_map(|(letters, a, b)| {
        WeylWord::new(Scalar::gaussian(a, b), letters.into_iter().map(|p| if p { Letter::P } else { Letter::X }).collect())
    })
}

fn expr() -> impl Strategy<Value = Vec<WeylWord>> {
    prop::collection::vec(word(), 1..=3)
}

fn product(e1: &[WeylWord], e2: &[WeylWord]) -> Vec<WeylWord> {
    e1.iter().flat_map(|a| e2.iter().map(move |b| a.mul(b))).collect()
}

/// `X = (z + d)/sqrt2` and `P = i(z - d)/sqrt2` in the orthonormal Fock basis.
fn ladder(n: usize) -> (DMatrix<Complex64>, DMatrix<Complex64>) {
    let mut z = DMatrix::zeros(n, n);
    for k in 0..n - 1 {
        z[(k + 1, k)] = Complex64::new(((k + 1) as f64).sqrt(), 0.0);
    }
    let d = z.adjoint();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let x = (&z + &d) * Complex64::new(r, 0.0);
    let p = (&z - &d) * Complex64::new(0.0, r);
    (x, p)
}

fn word_matrix(w: &WeylWord, x: &DMatrix<Complex64>, p: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = x.nrows();
    let m = w.letters.iter().fold(DMatrix::identity(n, n), |acc, l| acc * if *l == Letter::X { x } else { p });
    m * w.coeff.to_c64()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn round_trip_is_exact(op in small_op()) {
        let l = fock_to_lebesgue(&op);
        prop_assert!(l.is_exact());
        prop_assert_eq!(lebesgue_to_fock(&l), op);
    }

    #[test]
    fn reverse_round_trip(l in small_l2()) {
        let back = fock_to_lebesgue(&lebesgue_to_fock(&l));
        // odd total degree brings in sqrt(2), which Fock symbols hold in floating point
        if l.form().keys().all(|(m, q)| (m + q) % 2 == 0) {
            prop_assert_eq!(back, l);
        } else {
            prop_assert!(back.approx_eq(&l, 1e-12));
        }
    }

    #[test]
    fn normal_order_is_a_homomorphism(e1 in expr(), e2 in expr()) {
        let lhs = weyl_normal_order_xp(&product(&e1, &e2));
        let rhs = normal_product(&weyl_normal_order_xp(&e1), &weyl_normal_order_xp(&e2), &-Scalar::i());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(weyl_normal_order(&product(&e1, &e2)), weyl_normal_order(&e1).mul(&weyl_normal_order(&e2)));
    }

    #[test]
    fn transported_composition_matches_action(l1 in small_l2(), l2 in small_l2(), f in prop::collection::vec(-3i64..=3, 1..6)) {
        let f = Poly::from_ints(&f);
        let composed = lebesgue_to_fock(&l1.mul(&l2)).apply(&f);
        let stepwise = lebesgue_to_fock(&l1).apply(&lebesgue_to_fock(&l2).apply(&f));
        prop_assert!(composed.max_distance(&stepwise) <= 1e-9 * (1.0 + composed.max_distance(&Poly::zero())));
    }

    #[test]
    fn normal_forms_match_ladder_matrices(w in word()) {
        let n = 32;
        let (x, p) = ladder(n);
        let direct = word_matrix(&w, &x, &p);
        let mut canonical = DMatrix::zeros(n, n);
        for (&(a, b), c) in &weyl_normal_order_xp(std::slice::from_ref(&w)) {
            let term = WeylWord::new(Scalar::one(), [vec![Letter::X; a], vec![Letter::P; b]].concat());
            canonical += word_matrix(&term, &x, &p) * c.to_c64();
        }
        let block = n - w.letters.len() - 1;
        let diff = (direct.view((0, 0), (block, block)) - canonical.view((0, 0), (block, block))).norm();
        prop_assert!(diff <= 1e-9 * (1.0 + direct.norm()), "{}", diff);
    }
}

#[test]
fn oscillator_examples_and_orders() {
    let fock = DiffOp::new(vec![Poly::from_ints(&[0, 0, 1]), Poly::zero(), Poly::from_ints(&[-1])]);
    let expected = L2Op::new([(0, 0, Scalar::int(-1)), (1, 1, Scalar::int(-2))]);
    assert_eq!(fock_to_lebesgue(&fock), expected);
    assert_eq!((fock.order(), expected.order()), (2, 1));

    let h = DiffOp::new(vec![Poly::from_ints(&[1]), Poly::from_ints(&[0, 2])]);
    assert_eq!(lebesgue_to_fock(&L2Op::oscillator()), h);
    assert_eq!((L2Op::oscillator().order(), h.order()), (2, 1));
}

#[test]
fn spectrum_transports_to_the_oscillator() {
    let h = lebesgue_to_fock(&L2Op::oscillator());
    let r = spectrum(&h, &SpectrumOptions { kmax: 30, ..SpectrumOptions::oracle() }).unwrap();
    assert_eq!(r.kind, SpectrumKind::Progression);
    let odd: Vec<Scalar> = (0..=30).map(|k| Scalar::int(2 * k + 1)).collect();
    assert_eq!(r.enumerated, odd);
    assert_eq!(fock_to_lebesgue(&h), L2Op::oscillator());
}

#[test]
fn pair_integral_on_a_grid() {
    let grid: Vec<Complex64> = (0..5).map(|k| Complex64::from_polar(2.0 * k as f64 / 4.0, 1.3 * k as f64)).collect();
    let corners = [Complex64::new(2.0, 0.0), Complex64::new(-2.0, 0.0), Complex64::new(0.0, 2.0)];
    for &z in grid.iter().chain(&corners) {
        for &u in grid.iter().chain(&corners) {
            let err = (sb_pair_integral(z, u, 128).unwrap() - (z * u).exp()).norm();
            assert!(err < 1e-8, "z = {z}, u = {u}: {err}");
        }
    }
}
