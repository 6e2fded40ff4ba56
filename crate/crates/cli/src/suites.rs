//! Property suites behind `fockcalc verify`, seeded for reproducibility.

use fockcalc_core::fock::kernel::KernelVector;
use fockcalc_core::fock::{
    adjoint_eigen_on_kernels, adjoint_on_kernel, conjugation_apply, derivative_bound_check, eigencheck_poly, exp_tail_bound, inner_product,
    kernel_eigen_residual, spectrum, verify_adjoint_identity, FockSeries, SpectrumMode, SpectrumOptions,
};
use fockcalc_core::sb::{fock_to_lebesgue, hermite_conjugation_pullback, lebesgue_to_fock, pt_correspondence_check, sb_pair_integral};
use fockcalc_core::{adjoint_op, conjugate_op, is_c_selfadjoint, ConjugationParams, DiffOp, Error, Poly, Scalar};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::registry::Subject;
use crate::report::ResultEntry;

pub const SUITES: [&str; 5] = ["adjoint", "conjugation", "kernel", "spectrum", "sb"];

pub const CONJUGATION_TOL: f64 = 1e-8;
pub const KERNEL_TOL: f64 = 1e-9;
pub const EIGEN_TOL: f64 = 1e-8;
pub const SB_KERNEL_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct Context {
    pub n: usize,
    pub seed: u64,
    pub nodes: usize,
    pub trials: usize,
}

fn pair(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

fn rng(ctx: &Context, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_c64(rng: &mut impl Rng, radius: f64) -> Complex64 {
    loop {
        let z = Complex64::new(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius));
        if z.norm() <= radius {
            return z;
        }
    }
}

/// Unit-size orthonormal coordinates up to degree 16.
fn random_series(rng: &mut impl Rng, n: usize) -> FockSeries {
    let len = rng.gen_range(1..=17usize.min(n));
    let b: Vec<Complex64> = (0..len).map(|_| random_c64(rng, 1.0)).collect();
    FockSeries::from_orthonormal(&b, n)
}

fn random_params(rng: &mut impl Rng) -> ConjugationParams {
    let tau = std::f64::consts::TAU;
    ConjugationParams::from_angles(rng.gen_range(0.0..tau), rng.gen_range(0.0..=1.0), rng.gen_range(0.0..tau))
}

fn not_applicable(e: &Error) -> bool {
    matches!(
        e,
        Error::UnsupportedShape(_) | Error::CriterionNotApplicable(_) | Error::NotRepresentable { .. } | Error::NotZeroFree
    )
}

pub fn adjoint_suite(name: &str, op: &DiffOp, ctx: &Context) -> Vec<ResultEntry> {
    let mut out = Vec::new();
    match verify_adjoint_identity(op, ctx.n, ctx.trials, ctx.seed) {
        Ok(r) => out.push(ResultEntry::from_check("adjoint", name, &r)),
        Err(e) => out.push(ResultEntry::skipped("adjoint", name, "adjoint-identity", e.to_string())),
    }
    if let Ok(s) = adjoint_op(op, &Scalar::one(), &Scalar::zero()) {
        if let Ok(back) = adjoint_op(&s, &Scalar::one(), &Scalar::zero()) {
            let d = if back == *op { 0.0 } else { back.max_distance(op).max(f64::MIN_POSITIVE) };
            out.push(ResultEntry::single("adjoint", name, "adjoint-involution", d, 1e-12, json!({"exact": op.is_exact()})));
        }
    }
    out
}

/// Involution, anti-isometry and the kernel image law of `C_{a,b,c}` on
/// truncated series, plus the involution of `conjugate_op` on the subject.
pub fn conjugation_suite(name: &str, op: &DiffOp, params: Option<&ConjugationParams>, ctx: &Context) -> Vec<ResultEntry> {
    let mut rng = rng(ctx, 1);
    let mut triples: Vec<ConjugationParams> = params.into_iter().cloned().collect();
    while triples.len() < 3 {
        triples.push(random_params(&mut rng));
    }
    let n = ctx.n;
    let mut invol = fockcalc_core::CheckReport::new("conjugation-involution");
    let mut isometry = fockcalc_core::CheckReport::new("conjugation-antiisometry");
    let mut image = fockcalc_core::CheckReport::new("kernel-image-law");
    for p in &triples {
        let (a, b, c) = p.values();
        for _ in 0..ctx.trials {
            let f = random_series(&mut rng, n);
            let g = random_series(&mut rng, n);
            let cf = conjugation_apply(p, &f);
            let back = conjugation_apply(p, &cf).sub(&f).norm() / (1.0 + f.norm());
            invol.record(back, CONJUGATION_TOL, json!({"a": pair(a), "b": pair(b), "residual": back}));
            let lhs = inner_product(&cf, &conjugation_apply(p, &g));
            let rhs = inner_product(&f, &g).conj();
            let iso = (lhs - rhs).norm() / (1.0 + f.norm() * g.norm());
            isometry.record(iso, CONJUGATION_TOL, json!({"a": pair(a), "b": pair(b), "residual": iso}));
            let z = random_c64(&mut rng, 2.0);
            let got = conjugation_apply(p, &KernelVector::new(z, 0, n).series);
            let want = KernelVector::new((a * z + b).conj(), 0, n).series.scale(c * (b * z).exp());
            let tol = CONJUGATION_TOL + exp_tail_bound(b, n, 2.0) + exp_tail_bound(z.conj(), n, 2.0 + b.norm());
            let err = got.sub(&want).norm() / want.norm();
            image.record(err, tol, json!({"z": pair(z), "a": pair(a), "b": pair(b), "residual": err, "tol": tol}));
        }
    }
    let mut out: Vec<ResultEntry> = [invol, isometry, image].iter().map(|r| ResultEntry::from_check("conjugation", name, r)).collect();
    for p in &triples {
        match conjugate_op(op, p).and_then(|once| conjugate_op(&once, p)) {
            Ok(twice) => {
                let d = if twice == *op { 0.0 } else { twice.max_distance(op) };
                let (a, b, _) = p.values();
                out.push(ResultEntry::single("conjugation", name, "conjugate-op-involution", d, 1e-9, json!({"a": pair(a), "b": pair(b)})));
            }
            Err(e) => out.push(ResultEntry::skipped("conjugation", name, "conjugate-op-involution", e.to_string())),
        }
    }
    out
}

/// `<f, T* K_z> = (T f)(z)` and the derivative bound on random samples.
pub fn kernel_suite(name: &str, op: &DiffOp, ctx: &Context) -> Vec<ResultEntry> {
    let mut rng = rng(ctx, 2);
    let mut reproduce = fockcalc_core::CheckReport::new("adjoint-on-kernel");
    let degree_room = ctx.n.saturating_sub(op.max_degree() + 1).clamp(1, 12);
    for _ in 0..ctx.trials {
        let f = Poly::new((0..rng.gen_range(1..=degree_room)).map(|_| Scalar::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect());
        let z = random_c64(&mut rng, 1.5);
        let value = op.apply(&f).eval_c64(z);
        let via = inner_product(&FockSeries::from_poly(&f, ctx.n), &adjoint_on_kernel(op, z, 0, ctx.n));
        let err = (value - via).norm() / (1.0 + value.norm());
        reproduce.record(err, KERNEL_TOL, json!({"z": pair(z), "value": pair(value), "via_kernel": pair(via), "residual": err}));
    }
    let mut bound = fockcalc_core::CheckReport::new("derivative-bound");
    for _ in 0..ctx.trials {
        let f = random_series(&mut rng, ctx.n);
        let k = rng.gen_range(0..=5);
        let z = random_c64(&mut rng, 3.0);
        let ok = derivative_bound_check(&f, k, z);
        bound.record(if ok { 0.0 } else { 1.0 }, 0.0, json!({"k": k, "z": pair(z)}));
    }
    vec![ResultEntry::from_check("kernel", name, &reproduce), ResultEntry::from_check("kernel", name, &bound)]
}

/// Formula against oracle where the oracle applies, eigenpair residuals,
/// and the conjugate eigenpairs of `T*` on kernel combinations.
pub fn spectrum_suite(name: &str, op: &DiffOp, c_selfadjoint: bool, ctx: &Context) -> Vec<ResultEntry> {
    let kmax = 16;
    let base = SpectrumOptions { kmax, c_selfadjoint, truncation: ctx.n, mode: SpectrumMode::Formula };
    let mut out = Vec::new();
    let formula = match spectrum(op, &base) {
        Ok(r) => r,
        Err(e) if not_applicable(&e) => return vec![ResultEntry::skipped("spectrum", name, "spectrum", e.to_string())],
        Err(e) => return vec![ResultEntry::single("spectrum", name, "spectrum", f64::INFINITY, 0.0, json!({"error": e.to_string()}))],
    };
    match spectrum(op, &SpectrumOptions { mode: SpectrumMode::Oracle, ..base.clone() }) {
        Ok(oracle) => {
            let worst = oracle.eigenpairs.iter().map(|e| e.residual).fold(0.0, f64::max);
            out.push(ResultEntry::single("spectrum", name, "oracle-eigenpairs", worst, EIGEN_TOL, json!({"pairs": oracle.eigenpairs.len()})));
            let mismatch = formula
                .enumerated
                .iter()
                .zip(&oracle.enumerated)
                .map(|(x, y)| x.distance(y) / (1.0 + y.abs()))
                .fold(if formula.enumerated.len() == oracle.enumerated.len() { 0.0 } else { f64::INFINITY }, f64::max);
            out.push(
                ResultEntry::single("spectrum", name, "formula-matches-oracle", mismatch, 1e-9, json!({}))
                    .with_data(json!({"discrepancy": oracle.discrepancy, "kind": oracle.kind.as_str()})),
            );
        }
        Err(e) => out.push(ResultEntry::skipped("spectrum", name, "oracle-eigenpairs", e.to_string())),
    }
    if let Some(w) = &formula.witness_zero {
        let mut worst: f64 = 0.0;
        let mut checked = 0;
        let mut first_error = None;
        for (m, lambda) in formula.enumerated.iter().enumerate().take(11) {
            match adjoint_eigen_on_kernels(op, w, m).and_then(|pair| {
                let r = kernel_eigen_residual(op, &pair, ctx.n)?;
                Ok((r, pair.lambda.distance(&lambda.conj()) / (1.0 + lambda.abs())))
            }) {
                Ok((r, gap)) => {
                    worst = worst.max(r).max(gap);
                    checked += 1;
                }
                Err(e) => {
                    first_error.get_or_insert(e.to_string());
                }
            }
        }
        match first_error {
            Some(reason) if checked == 0 => out.push(ResultEntry::skipped("spectrum", name, "adjoint-kernel-eigenpairs", reason)),
            _ => out.push(ResultEntry::single("spectrum", name, "adjoint-kernel-eigenpairs", worst, EIGEN_TOL, json!({"checked": checked}))),
        }
    }
    if let Some(v) = formula.variants.iter().find(|v| v.name == "unconjugated") {
        out.push(
            ResultEntry::single("spectrum", name, "unconjugated-formula", if v.agrees { 0.0 } else { 1.0 }, 0.0, json!({}))
                .with_data(json!({"discrepancy": formula.discrepancy})),
        );
    }
    for k in 0..formula.enumerated.len().min(4) {
        if let Some(e) = formula.eigenpairs.get(k) {
            if let Ok(r) = eigencheck_poly(op, &e.lambda, &e.eigenfunction) {
                out.push(ResultEntry::single("spectrum", name, &format!("eigencheck-k{}", e.k), r, EIGEN_TOL, json!({})));
            }
        }
    }
    out
}

/// Exact round trip of the subject through the dictionary.
pub fn sb_subject_suite(name: &str, subject: &Subject) -> Vec<ResultEntry> {
    match subject {
        Subject::Fock { op, .. } => {
            let back = lebesgue_to_fock(&fock_to_lebesgue(op));
            let d = if back == *op { 0.0 } else { back.max_distance(op).max(f64::MIN_POSITIVE) };
            let tol = if op.is_exact() { 0.0 } else { 1e-12 };
            vec![ResultEntry::single("sb", name, "round-trip", d, tol, json!({"l2": fock_to_lebesgue(op).to_json()}))]
        }
        Subject::L2(l) => {
            let back = fock_to_lebesgue(&lebesgue_to_fock(l));
            let ok = back == *l || back.approx_eq(l, 1e-12);
            vec![ResultEntry::single("sb", name, "round-trip", if ok { 0.0 } else { 1.0 }, 0.0, json!({}))]
        }
    }
}

/// Quadrature identities of the transform kernel; independent of any subject.
pub fn sb_kernel_suite(params: Option<&ConjugationParams>, ctx: &Context) -> Vec<ResultEntry> {
    let mut out = Vec::new();
    let grid: Vec<Complex64> = (0..5).map(|k| Complex64::from_polar(0.5 * k as f64, 1.3 * k as f64)).collect();
    let mut pairs = fockcalc_core::CheckReport::new("pair-integral");
    for &z in &grid {
        for &u in &grid {
            match sb_pair_integral(z, u, ctx.nodes) {
                Ok(got) => {
                    let err = (got - (z * u).exp()).norm();
                    pairs.record(err, SB_KERNEL_TOL, json!({"z": pair(z), "u": pair(u), "residual": err}));
                }
                Err(e) => pairs.fail(json!({"error": e.to_string()})),
            }
        }
    }
    out.push(ResultEntry::from_check("sb", "kernel", &pairs));
    let samples = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.6, -0.8)];
    match pt_correspondence_check(ctx.nodes, &samples) {
        Ok(r) => out.push(ResultEntry::from_check("sb", "kernel", &r)),
        Err(e) => out.push(ResultEntry::single("sb", "kernel", "pt_correspondence", f64::INFINITY, 0.0, json!({"error": e.to_string()}))),
    }
    let mut rng = rng(ctx, 3);
    let triple = params.cloned().unwrap_or_else(|| random_params(&mut rng));
    for m in [0, 1, 2, 4] {
        match hermite_conjugation_pullback(&triple, m, ctx.nodes) {
            Ok(r) => out.push(ResultEntry::from_check("sb", "kernel", &r).with_data(json!({"m": m}))),
            Err(e) => out.push(ResultEntry::single("sb", "kernel", "hermite_conjugation_pullback", f64::INFINITY, 0.0, json!({"error": e.to_string()}))),
        }
    }
    out
}

/// Whether the subject is known to be `C`-selfadjoint for its conjugation.
pub fn c_selfadjoint(op: &DiffOp, params: Option<&ConjugationParams>, tol: f64) -> bool {
    params.is_some_and(|p| is_c_selfadjoint(op, p, tol).holds)
}
