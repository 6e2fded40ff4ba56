//! Point spectra of two-term operators `psi_0 + psi_n d^n` and of
//! first-order operators, by closed formula or by a shifted-monomial
//! oracle, plus the adjoint eigenvectors on kernel derivatives.

use num_complex::Complex64;
use serde_json::{json, Value};

use super::kernel::KernelVector;
use super::roots::roots;
use super::series::FockSeries;
use crate::adjoint::adjoint_op;
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::omega::OmegaTable;
use crate::poly::Poly;
use crate::scalar::Scalar;

pub const DEFAULT_KMAX: usize = 64;
pub const DEFAULT_TRUNCATION: usize = 64;
/// Relative tolerance for comparing approximate spectral values.
pub const VALUE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    FiniteSet,
    Progression,
    AllOfC,
    Empty,
    SubsetBound,
}

impl SpectrumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::FiniteSet => "FiniteSet",
            SpectrumKind::Progression => "Progression",
            SpectrumKind::AllOfC => "AllOfC",
            SpectrumKind::Empty => "Empty",
            SpectrumKind::SubsetBound => "SubsetBound",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    Formula,
    Oracle,
}

impl SpectrumMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumMode::Formula => "formula",
            SpectrumMode::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumOptions {
    pub mode: SpectrumMode,
    pub kmax: usize,
    /// The caller has established `C`-selfadjointness, so the inclusion
    /// becomes an equality.
    pub c_selfadjoint: bool,
    /// Truncation for residual checks.
    pub truncation: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { mode: SpectrumMode::Formula, kmax: DEFAULT_KMAX, c_selfadjoint: false, truncation: DEFAULT_TRUNCATION }
    }
}

impl SpectrumOptions {
    pub fn oracle() -> Self {
        SpectrumOptions { mode: SpectrumMode::Oracle, ..Default::default() }
    }
}

/// One closed-form reading of the progression:
/// * `unconjugated`: `psi_0(w) + C(k,n) psi_n^(n)(w)`;
/// * `conjugated`: `conj(psi_0(w)) + C(k,n) conj(psi_n^(n)(w))`;
/// * `literal-phase-free`: for `psi_0 = alpha`, `psi_n = (az+b)^n`, the
///   form `conj(alpha) + C(k,n) n!`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormulaVariant {
    pub name: &'static str,
    pub base: Scalar,
    pub value: Scalar,
    pub enumerated: Vec<Scalar>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair {
    pub k: usize,
    pub lambda: Scalar,
    pub eigenfunction: Poly,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult {
    pub kind: SpectrumKind,
    pub mode: SpectrumMode,
    pub base: Option<Scalar>,
    /// `psi_n^(n)(w)`, the increment unit.
    pub value: Option<Scalar>,
    pub witness_zero: Option<Scalar>,
    pub order: usize,
    pub kmax: usize,
    pub enumerated: Vec<Scalar>,
    pub variants: Vec<FormulaVariant>,
    /// Some formula variant disagrees with `enumerated`.
    pub discrepancy: bool,
    pub eigenpairs: Vec<Eigenpair>,
    pub note: Option<String>,
}

impl SpectrumResult {
    fn simple(kind: SpectrumKind, mode: SpectrumMode, order: usize, kmax: usize, enumerated: Vec<Scalar>, note: &str) -> Self {
        SpectrumResult {
            kind,
            mode,
            base: None,
            value: None,
            witness_zero: None,
            order,
            kmax,
            enumerated,
            variants: Vec::new(),
            discrepancy: false,
            eigenpairs: Vec::new(),
            note: Some(note.to_string()),
        }
    }

    /// `k`-th progression value, `k >= n` (or the base for `k < n`).
    pub fn progression_value(&self, k: usize) -> Option<Scalar> {
        let base = self.base.as_ref()?;
        if k < self.order {
            return Some(base.clone());
        }
        Some(base + &(Scalar::binomial(k, self.order) * self.value.as_ref()?))
    }

    pub fn to_json(&self) -> Value {
        let opt = |s: &Option<Scalar>| s.as_ref().map(Scalar::to_json).unwrap_or(Value::Null);
        let progression = matches!(self.kind, SpectrumKind::Progression | SpectrumKind::SubsetBound) && self.base.is_some();
        json!({
            "kind": self.kind.as_str(),
            "mode": self.mode.as_str(),
            "base": opt(&self.base),
            "increment_rule": if progression { Value::from("C(k,n)*value") } else { Value::Null },
            "value": opt(&self.value),
            "witness_zero": opt(&self.witness_zero),
            "order": self.order,
            "kmax": self.kmax,
            "enumerated": self.enumerated.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "variants": self.variants.iter().map(|v| json!({
                "name": v.name,
                "base": v.base.to_json(),
                "value": v.value.to_json(),
                "agrees": v.agrees,
            })).collect::<Vec<_>>(),
            "discrepancy": self.discrepancy,
            "eigenpairs": self.eigenpairs.iter().map(|e| json!({
                "k": e.k,
                "lambda": e.lambda.to_json(),
                "residual": e.residual,
            })).collect::<Vec<_>>(),
            "note": self.note,
        })
    }
}

fn same_value(x: &Scalar, y: &Scalar) -> bool {
    match (x.is_exact() && y.is_exact(), x.distance(y)) {
        (true, d) => d == 0.0,
        (false, d) => d <= VALUE_TOL * (1.0 + x.abs().max(y.abs())),
    }
}

fn dedup(values: Vec<Scalar>) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for v in values {
        if !out.iter().any(|u| same_value(u, &v)) {
            out.push(v);
        }
    }
    out
}

fn progression(base: &Scalar, value: &Scalar, n: usize, kmax: usize) -> Vec<Scalar> {
    let mut out = vec![base.clone()];
    out.extend((n.max(1)..=kmax).map(|k| base + &(Scalar::binomial(k, n) * value)));
    dedup(out)
}

fn same_sets(x: &[Scalar], y: &[Scalar]) -> bool {
    x.len() == y.len() && x.iter().all(|a| y.iter().any(|b| same_value(a, b)))
}

/// `|x| < |y|`, decided exactly when both are exact.
fn abs_less(x: &Scalar, y: &Scalar) -> bool {
    match (x.norm_sqr(), y.norm_sqr()) {
        (Scalar::Exact(a), Scalar::Exact(b)) => a.re < b.re,
        (a, b) => a.to_c64().re < b.to_c64().re,
    }
}

/// `exp(-alpha z^2/2 - beta z)` lies in the Fock space iff `|alpha| < 1`.
pub fn gaussian_membership(alpha: Complex64, _beta: Complex64) -> bool {
    alpha.norm() < 1.0
}

/// [`gaussian_membership`] decided exactly for exact `alpha`.
pub fn gaussian_member(alpha: &Scalar) -> bool {
    abs_less(alpha, &Scalar::one())
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianEigenfunction {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub member: bool,
}

/// For `psi_1 = C` constant and `psi_0 - lambda = C (alpha z + beta)`, the
/// solution `f = exp(-alpha z^2/2 - beta z)` of `psi_0 f + psi_1 f' = lambda f`.
pub fn first_order_eigenfunction(psi0: &Poly, psi1: &Poly, lambda: &Scalar) -> Result<GaussianEigenfunction> {
    if psi1.degree() != Some(0) {
        return Err(Error::NotZeroFree);
    }
    let c = psi1.coeff(0);
    let shifted = psi0 - &Poly::constant(lambda.clone());
    if shifted.degree().unwrap_or(0) > 1 {
        return Err(Error::NoEigenfunction(format!(
            "psi_0 - lambda has degree {}, not a linear multiple of psi_1",
            shifted.degree().unwrap_or(0)
        )));
    }
    let alpha = &shifted.coeff(1) / &c;
    let beta = &shifted.coeff(0) / &c;
    let member = gaussian_member(&alpha);
    Ok(GaussianEigenfunction { alpha, beta, member })
}

/// `||op f - lambda f|| / ||f||` by polynomial application.
pub fn eigencheck(op: &DiffOp, lambda: Complex64, f: &FockSeries) -> Result<f64> {
    eigencheck_poly(op, &Scalar::from_c64(lambda), &f.to_poly())
}

/// [`eigencheck`] on a polynomial; exactly zero when the residual
/// polynomial vanishes exactly.
pub fn eigencheck_poly(op: &DiffOp, lambda: &Scalar, f: &Poly) -> Result<f64> {
    if f.is_zero() {
        return Err(Error::ZeroEigenvector);
    }
    let diff = &op.apply(f) - &f.scale(lambda);
    if diff.is_zero() {
        return Ok(0.0);
    }
    let len = diff.coeffs().len().max(f.coeffs().len());
    Ok(FockSeries::from_poly(&diff, len).norm() / FockSeries::from_poly(f, len).norm())
}

/// Checks `psi_j = 0` for `0 < j < n`.
fn two_term_order(op: &DiffOp) -> Result<usize> {
    let n = op.order();
    if (1..n).any(|j| !op.symbol(j).is_zero()) {
        return Err(Error::UnsupportedShape(format!(
            "order-{n} operator with intermediate symbols; only psi_0 + psi_n d^n and first-order operators are supported"
        )));
    }
    Ok(n)
}

fn zeros_of_order(p: &Poly, n: usize) -> Vec<Scalar> {
    roots(p).into_iter().filter(|r| r.multiplicity == n).map(|r| r.value).collect()
}

/// Recognizes `psi_0 = alpha`, `psi_n = a^n (z - w)^n` with `|a| = 1`.
fn literal_phase_free(op: &DiffOp, n: usize, w: &Scalar) -> bool {
    let psi0 = op.symbol(0);
    let psin = op.symbol(n);
    if psi0.degree().unwrap_or(0) > 0 || psin.degree() != Some(n) {
        return false;
    }
    let lead = psin.coeff(n);
    let target = Poly::linear_power(&Scalar::one(), &-w, n).scale(&lead);
    (lead.abs() - 1.0).abs() <= VALUE_TOL && psin.approx_eq(&target, VALUE_TOL * (1.0 + target.max_distance(&Poly::zero())))
}

fn variants(op: &DiffOp, n: usize, w: &Scalar, base: &Scalar, value: &Scalar, kmax: usize, reference: &[Scalar]) -> Vec<FormulaVariant> {
    let mut out = Vec::new();
    let mut push = |name: &'static str, b: Scalar, v: Scalar| {
        let enumerated = progression(&b, &v, n, kmax);
        let agrees = same_sets(&enumerated, reference);
        out.push(FormulaVariant { name, base: b, value: v, enumerated, agrees });
    };
    push("unconjugated", base.clone(), value.clone());
    push("conjugated", base.conj(), value.conj());
    if literal_phase_free(op, n, w) {
        push("literal-phase-free", op.symbol(0).coeff(0).conj(), Scalar::falling(n, n));
    }
    out
}

fn order_zero(op: &DiffOp, opts: &SpectrumOptions) -> SpectrumResult {
    let psi0 = op.symbol(0);
    match psi0.degree() {
        None | Some(0) => {
            let c = psi0.coeff(0);
            let mut r = SpectrumResult::simple(SpectrumKind::FiniteSet, opts.mode, 0, opts.kmax, vec![c.clone()], "multiplication by a constant");
            if opts.mode == SpectrumMode::Oracle {
                let one = Poly::constant(Scalar::one());
                let residual = eigencheck_poly(op, &c, &one).unwrap_or(f64::NAN);
                r.eigenpairs.push(Eigenpair { k: 0, lambda: c, eigenfunction: one, residual });
            }
            r
        }
        Some(_) => SpectrumResult::simple(
            SpectrumKind::Empty,
            opts.mode,
            0,
            opts.kmax,
            Vec::new(),
            "multiplication by a nonconstant polynomial has no eigenfunctions",
        ),
    }
}

/// `psi_1 = C` constant: every complex number is an eigenvalue iff
/// `psi_0 = Az + B` with `|A| < |C|`, otherwise none is.
fn zero_free_first_order(op: &DiffOp, opts: &SpectrumOptions) -> SpectrumResult {
    let psi0 = op.symbol(0);
    let c = op.symbol(1).coeff(0);
    if psi0.degree().unwrap_or(0) > 1 {
        return SpectrumResult::simple(
            SpectrumKind::Empty,
            opts.mode,
            1,
            opts.kmax,
            Vec::new(),
            "psi_0 - lambda is never a linear multiple of the constant psi_1",
        );
    }
    let a = psi0.coeff(1);
    if abs_less(&a, &c) {
        SpectrumResult::simple(SpectrumKind::AllOfC, opts.mode, 1, opts.kmax, Vec::new(), "|A| < |C|: Gaussian eigenfunction for every lambda")
    } else {
        SpectrumResult::simple(SpectrumKind::Empty, opts.mode, 1, opts.kmax, Vec::new(), "|A| >= |C|: the Gaussian candidates leave the space")
    }
}

/// Point spectrum of `op`; see [`SpectrumOptions`].
pub fn spectrum(op: &DiffOp, opts: &SpectrumOptions) -> Result<SpectrumResult> {
    if op.order() == 0 {
        return Ok(order_zero(op, opts));
    }
    let n = two_term_order(op)?;
    let psin = op.symbol(n);
    if psin.degree() == Some(0) {
        if n == 1 {
            if opts.mode == SpectrumMode::Oracle {
                return Err(Error::UnsupportedShape(
                    "constant psi_1 has no triangular shifted-monomial form; use formula mode".into(),
                ));
            }
            return Ok(zero_free_first_order(op, opts));
        }
        return Err(Error::CriterionNotApplicable(format!("constant psi_{n} has no zero of order {n}")));
    }
    let zeros = zeros_of_order(&psin, n);
    let Some(w) = zeros.first().cloned() else {
        return Err(Error::CriterionNotApplicable(format!("psi_{n} has no zero of order exactly {n}")));
    };
    let psi0 = op.symbol(0);
    let base = psi0.eval(&w);
    let value = psin.nth_derivative(n).eval(&w);
    let mut result = match opts.mode {
        SpectrumMode::Formula => {
            let kind = if opts.c_selfadjoint { SpectrumKind::Progression } else { SpectrumKind::SubsetBound };
            SpectrumResult {
                kind,
                mode: opts.mode,
                base: Some(base.clone()),
                value: Some(value.clone()),
                witness_zero: Some(w.clone()),
                order: n,
                kmax: opts.kmax,
                enumerated: progression(&base, &value, n, opts.kmax),
                variants: Vec::new(),
                discrepancy: false,
                eigenpairs: Vec::new(),
                note: None,
            }
        }
        SpectrumMode::Oracle => oracle(op, n, &w, &value, opts)?,
    };
    result.variants = variants(op, n, &w, &base, &value, opts.kmax, &result.enumerated);
    result.discrepancy = result.variants.iter().any(|v| !v.agrees);
    if zeros.len() > 1 {
        let others: Vec<String> = zeros[1..].iter().map(|z| z.to_string()).collect();
        let extra = format!("further zeros of order {n}: {}; each bounds the spectrum too", others.join(", "));
        result.note = Some(match result.note.take() {
            Some(s) => format!("{s}; {extra}"),
            None => extra,
        });
    }
    Ok(result)
}

/// The action on `(z-w)^k` is triangular (degrees never drop) whenever
/// every `psi_j` vanishes to order `j` at `w`; its diagonal carries the
/// eigenvalues. Columns with no off-diagonal part give polynomial
/// eigenfunctions `(z-w)^k`. Symbols are expanded in powers of `(z-w)`
/// once, so the matrix entries carry no cancellation noise.
fn oracle(op: &DiffOp, n: usize, w: &Scalar, value: &Scalar, opts: &SpectrumOptions) -> Result<SpectrumResult> {
    let one = Scalar::one();
    let shift = -w;
    let shifted: Vec<Vec<Scalar>> = op.symbols().iter().map(|p| p.rebase(&one, &shift)).collect::<Result<_>>()?;
    let scale = shifted.iter().flatten().map(Scalar::abs).fold(0.0, f64::max);
    let negligible = |c: &Scalar| c.is_zero() || (!c.is_exact() && c.abs() <= 1e-12 * (1.0 + scale));
    for (j, s) in shifted.iter().enumerate() {
        if s.iter().take(j).any(|c| !negligible(c)) {
            return Err(Error::UnsupportedShape(format!("psi_{j} does not vanish to order {j} at w; not triangular")));
        }
    }
    // first derivative order whose symbol reaches above its diagonal
    let coupled_from = shifted.iter().enumerate().find(|(j, s)| s.iter().skip(j + 1).any(|c| !negligible(c))).map(|(j, _)| j);
    let mut diagonal = Vec::with_capacity(opts.kmax + 1);
    let mut eigenpairs = Vec::new();
    let mut all_diagonal = true;
    for k in 0..=opts.kmax {
        let lambda: Scalar = shifted
            .iter()
            .enumerate()
            .take(k + 1)
            .map(|(j, s)| s.get(j).cloned().unwrap_or_default() * Scalar::falling(k, j))
            .sum();
        if coupled_from.is_some_and(|j| j <= k) {
            all_diagonal = false;
        } else {
            let basis = Poly::linear_power(&one, &shift, k);
            let residual = eigencheck_poly(op, &lambda, &basis)?;
            eigenpairs.push(Eigenpair { k, lambda: lambda.clone(), eigenfunction: basis, residual });
        }
        diagonal.push(lambda);
    }
    let base = diagonal[0].clone();
    let oracle_value = if opts.kmax >= n { &diagonal[n] - &base } else { value.clone() };
    let kind = if all_diagonal || opts.c_selfadjoint { SpectrumKind::Progression } else { SpectrumKind::SubsetBound };
    let note = (!all_diagonal).then(|| "some columns are triangular but not diagonal; their eigenvectors are not polynomial".to_string());
    Ok(SpectrumResult {
        kind,
        mode: SpectrumMode::Oracle,
        base: Some(base),
        value: Some(oracle_value),
        witness_zero: Some(w.clone()),
        order: n,
        kmax: opts.kmax,
        enumerated: dedup(diagonal),
        variants: Vec::new(),
        discrepancy: false,
        eigenpairs,
        note,
    })
}

/// An eigenvector of the adjoint in `span{K_w, ..., K_w^[m]}`, with
/// coefficients normalized so the first nonzero one is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelEigenvector {
    pub w: Scalar,
    pub lambda: Scalar,
    pub coefficients: Vec<Scalar>,
}

impl KernelEigenvector {
    pub fn realize(&self, n: usize) -> FockSeries {
        let z = self.w.to_c64();
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(FockSeries::zero(n), |acc, (j, c)| acc.add(&KernelVector::new(z, j, n).series.scale(c.to_c64())))
    }
}

fn negligible_against(c: &Scalar, scale: f64) -> bool {
    c.is_zero() || (!c.is_exact() && c.abs() <= 1e-10 * (1.0 + scale))
}

/// Solves the upper triangular system of `T*` on `span{K_w^[j] : j <= m}`
/// (entries `conj(omega[i][j](w))`) for the eigenvector whose top
/// coefficient is 1; its eigenvalue is the `m`-th diagonal entry.
pub fn adjoint_eigen_on_kernels(op: &DiffOp, w: &Scalar, m: usize) -> Result<KernelEigenvector> {
    let table = OmegaTable::new(op, m);
    let kappa = op.order();
    let entry = |i: usize, j: usize| table.get(i, j).eval(w).conj();
    let a: Vec<Vec<Scalar>> = (0..=m).map(|i| (0..=m).map(|j| entry(i, j)).collect()).collect();
    let scale = a.iter().flatten().map(Scalar::abs).fold(0.0, f64::max);
    for j in 0..=m {
        for i in (j + 1)..=(kappa + j) {
            if !negligible_against(&entry(i, j), scale) {
                return Err(Error::CriterionNotApplicable(format!(
                    "T* K_w^[{j}] has a K_w^[{i}] component; the kernel span is not triangular at w"
                )));
            }
        }
    }
    let lambda = a[m][m].clone();
    let mut v = vec![Scalar::zero(); m + 1];
    v[m] = Scalar::one();
    for i in (0..m).rev() {
        let rhs: Scalar = ((i + 1)..=m).map(|j| -(&a[i][j] * &v[j])).sum();
        let diag = &a[i][i] - &lambda;
        if negligible_against(&diag, scale) {
            if negligible_against(&rhs, scale) {
                v[i] = Scalar::zero();
            } else {
                return Err(Error::GeneralizedEigenvector { index: i });
            }
        } else {
            v[i] = &rhs / &diag;
        }
    }
    let top = v.iter().map(Scalar::abs).fold(0.0, f64::max);
    let lead = v.iter().find(|c| !c.is_zero() && (c.is_exact() || c.abs() > 1e-12 * top)).cloned().unwrap_or_else(Scalar::one);
    let coefficients = v.iter().map(|c| c / &lead).collect();
    Ok(KernelEigenvector { w: w.clone(), lambda, coefficients })
}

/// `||S v - lambda v|| / ||v||` with `S` the symbol adjoint and `v`
/// realized at truncation `n`.
pub fn kernel_eigen_residual(op: &DiffOp, pair: &KernelEigenvector, n: usize) -> Result<f64> {
    let s = adjoint_op(op, &Scalar::one(), &Scalar::zero())?;
    let v = pair.realize(n);
    let image = s.to_approx().apply(&v.to_poly());
    let len = image.coeffs().len().max(n);
    let diff = FockSeries::from_poly(&image, len).sub(&v.truncated(len).scale(pair.lambda.to_c64()));
    Ok(diff.norm() / v.norm())
}
