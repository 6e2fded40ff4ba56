//! Acceptance criteria 1 to 10. Prints one line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use fockcalc_core::fock::kernel::KernelVector;
use fockcalc_core::fock::series::poly_inner_product;
use fockcalc_core::fock::{
    adjoint_eigen_on_kernels, adjoint_on_kernel, conjugation_apply, derivative_bound_check, eigencheck_poly, exp_tail_bound, fock_matrix,
    inner_product, kernel_eigen_residual, spectrum, FockSeries, SpectrumKind, SpectrumOptions,
};
use fockcalc_core::sb::{fock_to_lebesgue, lebesgue_to_fock, pt_correspondence_check, sb_pair_integral, L2Op};
use fockcalc_core::symmetry::DEFAULT_SYMMETRY_TOL;
use fockcalc_core::{
    adjoint_op, conjugate_op, gamma_examples, is_c_selfadjoint, is_selfadjoint, ConjugationParams, DiffOp, Poly, Scalar, SymbolMatrix,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

fn c64(rng: &mut impl Rng, radius: f64) -> Complex64 {
    loop {
        let z = Complex64::new(rng.gen_range(-radius..radius), rng.gen_range(-radius..radius));
        if z.norm() <= radius {
            return z;
        }
    }
}

fn int_poly(rng: &mut impl Rng, max_degree: usize, bound: i64) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    Poly::new((0..=degree).map(|_| Scalar::int(rng.gen_range(-bound..=bound))).collect())
}

fn gaussian_poly(rng: &mut impl Rng, max_degree: usize, bound: i64) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    Poly::new((0..=degree).map(|_| Scalar::gaussian(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))).collect())
}

fn random_params(rng: &mut impl Rng) -> ConjugationParams {
    let tau = std::f64::consts::TAU;
    ConjugationParams::from_angles(rng.gen_range(0.0..tau), rng.gen_range(0.0..=1.0), rng.gen_range(0.0..tau))
}

fn unit_series(rng: &mut impl Rng, n: usize) -> FockSeries {
    let b: Vec<Complex64> = (0..rng.gen_range(1..=17)).map(|_| c64(rng, 1.0)).collect();
    FockSeries::from_orthonormal(&b, n)
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn adjoint_theorem() -> Outcome {
    let started = Instant::now();
    let mut rng = rng(1);
    let mut nonzero = 0;
    for _ in 0..200 {
        let order = rng.gen_range(0..=3);
        let op = DiffOp::new((0..=order).map(|_| int_poly(&mut rng, 3, 5)).collect());
        let s = adjoint_op(&op, &Scalar::one(), &Scalar::zero()).expect("z basis");
        let f = gaussian_poly(&mut rng, 40, 5);
        let g = gaussian_poly(&mut rng, 40, 5);
        if poly_inner_product(&op.apply(&f), &g) != poly_inner_product(&f, &s.apply(&g)) {
            nonzero += 1;
        }
    }
    let t = started.elapsed();
    outcome(nonzero == 0 && t < Duration::from_secs(30), format!("200 operators, {nonzero} nonzero residuals, {}", secs(t)))
}

fn c_selfadjoint_equivalence() -> Outcome {
    let started = Instant::now();
    let mut rng = rng(2);
    let (mut symmetric_ok, mut perturbed_fail, mut worst) = (0, 0, 0.0f64);
    for _ in 0..10 {
        let p = random_params(&mut rng);
        for _ in 0..10 {
            let size = rng.gen_range(2..=4);
            let mut d = vec![vec![Scalar::zero(); size]; size];
            for j in 0..size {
                for q in j..size {
                    let v = Scalar::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
                    d[j][q] = v.clone();
                    d[q][j] = v;
                }
            }
            let op = SymbolMatrix::from_entries(d.clone(), p.a(), p.b()).to_diffop();
            let transformed = conjugate_op(&adjoint_op(&op, &Scalar::one(), &Scalar::zero()).unwrap(), &p).unwrap();
            let dist = transformed.max_distance(&op);
            worst = worst.max(dist);
            if is_c_selfadjoint(&op, &p, DEFAULT_SYMMETRY_TOL).holds && dist <= 1e-9 {
                symmetric_ok += 1;
            }
            let j = rng.gen_range(0..size);
            let q = (j + rng.gen_range(1..size)) % size;
            d[j][q] = &d[j][q] + &Scalar::approx(1e-3, 0.0);
            let bent = SymbolMatrix::from_entries(d, p.a(), p.b()).to_diffop();
            if !is_c_selfadjoint(&bent, &p, DEFAULT_SYMMETRY_TOL).holds {
                perturbed_fail += 1;
            }
        }
    }
    let t = started.elapsed();
    outcome(
        symmetric_ok == 100 && perturbed_fail == 100 && t < Duration::from_secs(30),
        format!("symmetric pass {symmetric_ok}/100 (worst transform gap {worst:.1e}), perturbed fail {perturbed_fail}/100, {}", secs(t)),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = fockcalc::run(std::iter::once("fockcalc").chain(args.iter().copied()));
    let json = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, json)
}

fn named_fixtures() -> Outcome {
    let standard = ConjugationParams::standard();
    let (gamma1, _) = gamma_examples(&Scalar::one(), &Scalar::one(), &Scalar::zero(), &standard).unwrap();
    let (_, gamma2) = gamma_examples(&Scalar::zero(), &Scalar::zero(), &Scalar::one(), &standard).unwrap();
    let mut checks = vec![
        ("gamma1 c-self", is_c_selfadjoint(&gamma1, &standard, DEFAULT_SYMMETRY_TOL).holds),
        ("gamma2 c-self", is_c_selfadjoint(&gamma2, &standard, DEFAULT_SYMMETRY_TOL).holds),
        ("H c-self (-1,0,1)", is_c_selfadjoint(&DiffOp::oscillator(), &ConjugationParams::pt(), DEFAULT_SYMMETRY_TOL).holds),
        ("H self", is_selfadjoint(&DiffOp::oscillator(), DEFAULT_SYMMETRY_TOL).holds),
    ];
    // the same fixtures through the command line
    checks.push(("cli gamma1", run_json(&["check", "--example", "gamma1", "--mode", "c-self"]).0 == 0));
    checks.push(("cli gamma2", run_json(&["check", "--example", "gamma2", "--mode", "c-self"]).0 == 0));
    checks.push(("cli H c-self", run_json(&["check", "--example", "harmonic-oscillator", "--mode", "c-self"]).0 == 0));
    checks.push(("cli H self", run_json(&["check", "--example", "harmonic-oscillator", "--mode", "self"]).0 == 0));
    // generic parameters for the Gamma families
    let p = ConjugationParams::from_angles(2.1, 0.8, 0.3);
    let g = Scalar::gaussian(1, -2);
    let (g1, g2) = gamma_examples(&g, &Scalar::approx(0.7, 0.2), &Scalar::approx(-0.4, 1.1), &p).unwrap();
    checks.push(("gamma1 generic", is_c_selfadjoint(&g1, &p, DEFAULT_SYMMETRY_TOL).holds));
    checks.push(("gamma2 generic", is_c_selfadjoint(&g2, &p, DEFAULT_SYMMETRY_TOL).holds));
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(failed.is_empty(), if failed.is_empty() { format!("{} checks", checks.len()) } else { format!("failed: {}", failed.join(", ")) })
}

fn oscillator_spectrum() -> Outcome {
    let kmax = 64;
    let mut problems = Vec::new();
    for mode in ["formula", "oracle"] {
        let (code, json) = run_json(&["spectrum", "--example", "harmonic-oscillator", "--mode", mode, "--kmax", "64"]);
        let values: Vec<Scalar> = json["results"][0]["data"]["enumerated"]
            .as_array()
            .map(|a| a.iter().filter_map(|v| Scalar::from_json(v).ok()).collect())
            .unwrap_or_default();
        let expected: Vec<Scalar> = (0..=kmax).map(|k| Scalar::int(2 * k + 1)).collect();
        if code != 0 || values != expected {
            problems.push(format!("{mode}: exit {code}, {} values", values.len()));
        }
    }
    let h = DiffOp::oscillator();
    let nonzero = (0..=kmax as usize)
        .filter(|&k| eigencheck_poly(&h, &Scalar::int(2 * k as i64 + 1), &Poly::monomial(Scalar::one(), k)).unwrap() != 0.0)
        .count();
    if nonzero > 0 {
        problems.push(format!("{nonzero} nonzero eigencheck residuals"));
    }
    let m = fock_matrix(&h, 64);
    let worst = (0..64).map(|k| (m.get(k, k) - Complex64::new(2.0 * k as f64 + 1.0, 0.0)).norm() / (2.0 * k as f64 + 1.0)).fold(0.0, f64::max);
    if worst > 4.0 * f64::EPSILON {
        problems.push(format!("matrix diagonal off by {worst:.1e}"));
    }
    outcome(problems.is_empty(), if problems.is_empty() { format!("{{1, 3, ..., 129}} in both modes, diagonal gap {worst:.1e}") } else { problems.join("; ") })
}

fn two_term_oracle_agreement() -> Outcome {
    let mut rng = rng(5);
    let (mut bad, mut discrepancies, mut worst) = (Vec::new(), 0, 0.0f64);
    for trial in 0..20 {
        let alpha = c64(&mut rng, 3.0);
        let a = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let b = c64(&mut rng, 1.0);
        let n = rng.gen_range(1..=3);
        let op = DiffOp::two_term(Poly::constant(Scalar::from_c64(alpha)), Poly::linear_power(&Scalar::from_c64(a), &Scalar::from_c64(b), n), n);
        let r = match spectrum(&op, &SpectrumOptions { kmax: 20, ..SpectrumOptions::oracle() }) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("trial {trial}: {e}"));
                continue;
            }
        };
        let residual = r.eigenpairs.iter().map(|e| e.residual).fold(0.0, f64::max);
        worst = worst.max(residual);
        let agrees = |name: &str| r.variants.iter().find(|v| v.name == name).is_some_and(|v| v.agrees);
        let (conj, unconj) = (agrees("conjugated"), agrees("unconjugated"));
        let reported = r.discrepancy == r.variants.iter().any(|v| !v.agrees);
        if conj != unconj {
            discrepancies += 1;
        }
        if residual >= 1e-10 || r.eigenpairs.len() != 21 || !(conj || unconj) || !reported || (conj != unconj && !r.discrepancy) {
            bad.push(format!("trial {trial}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("20 operators, worst residual {worst:.1e}, {discrepancies} with conjugated/unconjugated mismatch reported{}", if bad.is_empty() { String::new() } else { format!("; failing {}", bad.join(", ")) }),
    )
}

fn first_order_classification() -> Outcome {
    let mut problems = Vec::new();
    let c = Scalar::gaussian(0, 1);
    for k in 1..=20 {
        // |A| = k/10 around |C| = 1, with A exact so the comparison is exact
        let a = Scalar::ratio(3 * k, 50) + Scalar::ratio(4 * k, 50) * Scalar::i();
        let op = DiffOp::new(vec![Poly::linear(a.clone(), Scalar::int(2)), Poly::constant(c.clone())]);
        let kind = spectrum(&op, &SpectrumOptions::default()).map(|r| r.kind);
        let want = if k < 10 { SpectrumKind::AllOfC } else { SpectrumKind::Empty };
        if kind != Ok(want) {
            problems.push(format!("|A| = {}: {kind:?}", k as f64 / 10.0));
        }
    }
    let mut rng = rng(6);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let w = c64(&mut rng, 1.0);
        let lead = c64(&mut rng, 1.5) + Complex64::new(0.5, 0.0);
        let psi0 = Poly::from_c64(&[c64(&mut rng, 2.0), c64(&mut rng, 2.0)]);
        let psi1 = Poly::from_c64(&[-lead * w, lead]);
        let op = DiffOp::new(vec![psi0.clone(), psi1.clone()]);
        let r = spectrum(&op, &SpectrumOptions { kmax: 10, ..Default::default() }).unwrap();
        let ws = Scalar::from_c64(w);
        for k in 0..=10 {
            let candidate = psi0.eval_c64(w) + lead * k as f64;
            let listed = r.enumerated.get(k).map(Scalar::to_c64);
            if listed.is_none_or(|v| (v - candidate).norm() > 1e-9 * (1.0 + candidate.norm())) {
                problems.push(format!("candidate k = {k} not enumerated"));
                continue;
            }
            match adjoint_eigen_on_kernels(&op, &ws, k) {
                Ok(pair) => {
                    let res = kernel_eigen_residual(&op, &pair, 64).unwrap();
                    let gap = (pair.lambda.to_c64() - candidate.conj()).norm() / (1.0 + candidate.norm());
                    worst = worst.max(res);
                    if res >= 1e-8 || gap > 1e-9 {
                        problems.push(format!("k = {k}: residual {res:.1e}, eigenvalue gap {gap:.1e}"));
                    }
                }
                Err(e) => problems.push(format!("k = {k}: {e}")),
            }
        }
    }
    outcome(problems.is_empty(), if problems.is_empty() { format!("20-point grid and 55 kernel eigenpairs, worst residual {worst:.1e}") } else { problems.join("; ") })
}

fn segal_bargmann_dictionary() -> Outcome {
    let started = Instant::now();
    let fock = DiffOp::new(vec![Poly::from_ints(&[0, 0, 1]), Poly::zero(), Poly::from_ints(&[-1])]);
    let forward = fock_to_lebesgue(&fock) == L2Op::new([(0, 0, Scalar::int(-1)), (1, 1, Scalar::int(-2))]);
    let backward = lebesgue_to_fock(&L2Op::oscillator()) == DiffOp::oscillator();
    let mut rng = rng(7);
    let mut trips = 0;
    for _ in 0..100 {
        let order = rng.gen_range(0..=3);
        let op = DiffOp::new((0..=order).map(|_| gaussian_poly(&mut rng, 3, 3)).collect());
        let l = fock_to_lebesgue(&op);
        if l.is_exact() && lebesgue_to_fock(&l) == op {
            trips += 1;
        }
    }
    let t = started.elapsed();
    outcome(
        forward && backward && trips == 100 && t < Duration::from_secs(10),
        format!("examples {forward}/{backward}, exact round trips {trips}/100, {}", secs(t)),
    )
}

fn kernel_integral() -> Outcome {
    let points = [
        Complex64::new(0.0, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(0.0, -2.0),
        Complex64::new(-1.2, 1.6),
        Complex64::new(1.0, 1.0),
    ];
    let mut worst: f64 = 0.0;
    for &z in &points {
        for &u in &points {
            worst = worst.max((sb_pair_integral(z, u, 128).unwrap() - (z * u).exp()).norm());
        }
    }
    let samples = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 1.0), Complex64::new(0.5, -1.5)];
    let report = pt_correspondence_check(128, &samples).unwrap();
    let deviation = report
        .details
        .iter()
        .map(|d| {
            let get = |k: &str| Complex64::new(d[k][0].as_f64().unwrap(), d[k][1].as_f64().unwrap());
            (get("quadrature") - get("closed_form")).norm()
        })
        .fold(0.0, f64::max);
    outcome(worst < 1e-8 && deviation < 1e-6, format!("grid error {worst:.1e}, correspondence deviation {deviation:.1e}"))
}

fn conjugation_axioms() -> Outcome {
    let n = 64;
    let mut rng = rng(9);
    let (mut invol, mut iso, mut image, mut adjoint_law) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut violations = 0;
    let op = DiffOp::new(vec![Poly::from_ints(&[1, -2]), Poly::from_ints(&[0, 1, 1]), Poly::from_ints(&[3])]);
    for _ in 0..10 {
        let p = random_params(&mut rng);
        let (a, b, c) = p.values();
        for _ in 0..5 {
            let f = unit_series(&mut rng, n);
            let g = unit_series(&mut rng, n);
            let cf = conjugation_apply(&p, &f);
            invol = invol.max(conjugation_apply(&p, &cf).sub(&f).norm());
            iso = iso.max((inner_product(&cf, &conjugation_apply(&p, &g)) - inner_product(&f, &g).conj()).norm());
            let z = c64(&mut rng, 2.0);
            let zeta = (a * z + b).conj();
            let tol = 1e-8 + exp_tail_bound(b, n, 2.0) + exp_tail_bound(zeta, n, 2.0);
            let got = conjugation_apply(&p, &KernelVector::new(z, 0, n).series);
            let want = KernelVector::new(zeta, 0, n).series.scale(c * (b * z).exp());
            let e1 = got.sub(&want).norm() / want.norm();
            // C T* C K_z = sum_j psi_j(zeta) (au + b)^j e^{u conj z}
            let lhs = conjugation_apply(&p, &adjoint_on_kernel(&op, zeta, 0, n).scale(c * (b * z).exp()));
            let mut head = Poly::zero();
            for (j, psi) in op.symbols().iter().enumerate() {
                head = &head + &Poly::linear_power(&Scalar::from_c64(a), &Scalar::from_c64(b), j).scale(&Scalar::from_c64(psi.eval_c64(zeta)));
            }
            let target = FockSeries::from_poly(&(&head * &KernelVector::new(z, 0, n).series.to_poly()), n);
            let e2 = lhs.sub(&target).norm() / (1.0 + target.norm());
            image = image.max(e1);
            adjoint_law = adjoint_law.max(e2);
            if e1 > tol || e2 > tol {
                violations += 1;
            }
        }
    }
    outcome(
        invol <= 1e-8 && iso <= 1e-8 && violations == 0,
        format!("involution {invol:.1e}, anti-isometry {iso:.1e}, kernel image {image:.1e}, conjugated adjoint {adjoint_law:.1e}"),
    )
}

fn derivative_bound() -> Outcome {
    let mut rng = rng(10);
    let violations = (0..1000)
        .filter(|_| {
            let f = unit_series(&mut rng, 64);
            let k = rng.gen_range(0..=5);
            let z = c64(&mut rng, 3.0);
            !derivative_bound_check(&f, k, z)
        })
        .count();
    outcome(violations == 0, format!("1000 samples, {violations} violations"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("adjoint theorem in exact arithmetic", adjoint_theorem),
        ("C-selfadjointness criterion and transform agree", c_selfadjoint_equivalence),
        ("Gamma families and the oscillator fixtures", named_fixtures),
        ("oscillator spectrum", oscillator_spectrum),
        ("two-term oracle agreement", two_term_oracle_agreement),
        ("first-order classification", first_order_classification),
        ("Segal-Bargmann dictionary", segal_bargmann_dictionary),
        ("transform kernel integrals", kernel_integral),
        ("conjugation axioms at truncation", conjugation_axioms),
        ("derivative bound", derivative_bound),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {}  {name}: {} [{}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            secs(started.elapsed())
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
