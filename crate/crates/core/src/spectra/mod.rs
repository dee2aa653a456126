//! Spectra of `M(1)` and of the whole sequence `M(n)`.
//!
//! `M(1)` has characteristic polynomial `λ³ − aλ − 1`, whose discriminant
//! is `4a³ − 27`. Every `M(n)` is a polynomial in `M(1)` (the recurrence is
//! linear and `M(2) = M(1)²`), so one eigenvector basis of `M(1)` serves
//! the whole sequence and eigenvalue index `i` names the same eigenvector
//! line for every `n`. Indices follow the ascending order of the roots of
//! `λ³ − aλ − 1`.

mod roots;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{
    f64_to_rational, int_rational, rational_to_f64, render_rational, QuadraticSurd, Rational,
};
use crate::matrix3::{CubicPoly, Mat3};
use crate::padovan_matrices::{mp_initial, MpSequence};
use crate::report::{Failure, Report};
use crate::sequences::{lucas, BiPeriodicParams};

pub use roots::{real_root_intervals, surd_roots, IntervalJson, RootInterval};

/// Default isolation width.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Residual bound for `|χ(λ)|` relative to `max(1, |λ|³)`.
pub const RESIDUAL_BOUND: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootClass {
    ThreeDistinctReal,
    RepeatedReal,
    OneRealTwoComplex,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl RootClass {
    pub fn from_discriminant(disc: &Rational) -> Self {
        match disc.cmp(&Rational::zero()) {
            Ordering::Greater => Self::ThreeDistinctReal,
            Ordering::Equal => Self::RepeatedReal,
            Ordering::Less => Self::OneRealTwoComplex,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumVerdict {
    pub discriminant: Rational,
    pub classification: RootClass,
    pub diagonalizable_over_r: bool,
    pub in_paper_proven_region: bool,
}

impl SpectrumVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "discriminant": render_rational(&self.discriminant),
            "classification": self.classification,
            "diagonalizable_over_R": self.diagonalizable_over_r,
            "in_paper_proven_region": self.in_paper_proven_region,
        })
    }
}

/// `λ³ − aλ − 1`.
pub fn mp1_char_poly(a: &Rational) -> CubicPoly<Rational> {
    CubicPoly::new(Rational::one(), Rational::zero(), -a.clone(), -Rational::one())
}

/// `4a³ − 27`, the discriminant of `λ³ − aλ − 1`.
pub fn cubic_discriminant(a: &Rational) -> Rational {
    int_rational(4) * a * a * a - int_rational(27)
}

/// `M(1)` for a numeric `a` (any value, including zero).
pub fn mp1_matrix(a: &Rational) -> Mat3<Rational> {
    let (o, l) = (Rational::zero(), Rational::one());
    Mat3::from_rows([
        [o.clone(), l.clone(), o.clone()],
        [o.clone(), o.clone(), l.clone()],
        [l, a.clone(), o],
    ])
}

/// Root structure of `χ_A` and whether `A` is diagonalizable over ℝ.
///
/// A repeated root of a rational cubic is rational, so the repeated case is
/// decided exactly: `A` is diagonalizable iff the product of `A − rI` over
/// the distinct roots `r` vanishes.
pub fn classify_matrix(matrix: &Mat3<Rational>) -> (Rational, RootClass, bool) {
    let poly = matrix.char_poly();
    let disc = poly.discriminant();
    let class = RootClass::from_discriminant(&disc);
    let diagonalizable = match class {
        RootClass::ThreeDistinctReal => true,
        RootClass::OneRealTwoComplex => false,
        RootClass::RepeatedReal => {
            let distinct = repeated_case_roots(&poly);
            let mut product = Mat3::identity();
            for r in &distinct {
                product = product.matmul(&(matrix.clone() - Mat3::identity().scale(r)));
            }
            product.is_zero()
        }
    };
    (disc, class, diagonalizable)
}

/// Distinct roots of a monic-up-to-scale cubic with zero discriminant.
fn repeated_case_roots(poly: &CubicPoly<Rational>) -> Vec<Rational> {
    let c2 = &poly.c2 / &poly.c3;
    let c1 = &poly.c1 / &poly.c3;
    let c0 = &poly.c0 / &poly.c3;
    let spread = &c2 * &c2 - int_rational(3) * &c1;
    if spread.is_zero() {
        vec![-c2 / int_rational(3)]
    } else {
        let double = (int_rational(9) * &c0 - &c1 * &c2) / (int_rational(2) * &spread);
        let single = -c2 - int_rational(2) * &double;
        vec![double, single]
    }
}

pub fn matrix_verdict(matrix: &Mat3<Rational>, in_paper_proven_region: bool) -> SpectrumVerdict {
    let (discriminant, classification, diagonalizable_over_r) = classify_matrix(matrix);
    SpectrumVerdict {
        discriminant,
        classification,
        diagonalizable_over_r,
        in_paper_proven_region,
    }
}

/// Verdict for `M(1)`; the proven region is `a >= 2`.
pub fn mp1_verdict(a: &Rational) -> SpectrumVerdict {
    let verdict = matrix_verdict(&mp1_matrix(a), *a >= int_rational(2));
    debug_assert_eq!(verdict.discriminant, cubic_discriminant(a));
    verdict
}

/// For `a > 2`, the points `−a, −1, 0, a` where `f = λ³ − aλ − 1` takes the
/// signs `−, +, −, +`. `None` if the pattern fails.
pub fn sign_pattern_seeds(a: &Rational) -> Option<[Rational; 4]> {
    let f = mp1_char_poly(a);
    let seeds = [-a.clone(), -Rational::one(), Rational::zero(), a.clone()];
    let expected = [-1, 1, -1, 1];
    let ok = seeds.iter().zip(expected).all(|(x, s)| {
        let v = f.eval(x);
        if s > 0 {
            v.is_positive()
        } else {
            v.is_negative()
        }
    });
    ok.then_some(seeds)
}

/// The three real roots of `λ³ − aλ − 1`, ascending, each isolated to width
/// `<= tol`.
///
/// For `a > 2` the brackets are `(−a, −1)`, `(−1, 0)`, `(0, a)` from the
/// sign pattern and refinement is plain sign bisection. Otherwise (positive
/// discriminant with `a <= 2`, including the exact root `−1` at `a = 2`)
/// Sturm-sequence isolation is used.
pub fn isolate_roots(a: &Rational, tol: f64) -> Result<[RootInterval; 3]> {
    let disc = cubic_discriminant(a);
    if !disc.is_positive() {
        return Err(Error::NotThreeRealRoots {
            discriminant: render_rational(&disc),
        });
    }
    let f = mp1_char_poly(a);
    let intervals: Vec<RootInterval> = match (*a > int_rational(2)).then(|| sign_pattern_seeds(a)).flatten() {
        Some(seeds) => seeds
            .windows(2)
            .map(|w| roots::bisect_sign_change(&f, w[0].clone(), w[1].clone(), tol))
            .collect(),
        None => real_root_intervals(&f, tol),
    };
    intervals.try_into().map_err(|_: Vec<_>| Error::NotThreeRealRoots {
        discriminant: render_rational(&disc),
    })
}

/// Eigenvalues of `M(n)` on the fixed eigenvector basis of `M(1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenTriple {
    pub n: usize,
    pub values: [f64; 3],
    /// Present when the roots of `λ³ − aλ − 1` lie in ℚ(√5) (e.g. `a = 2`).
    pub exact: Option<[QuadraticSurd; 3]>,
}

impl EigenTriple {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({ "n": self.n, "values": self.values });
        if let Some(exact) = &self.exact {
            obj["exact"] = serde_json::json!(exact.iter().map(ToString::to_string).collect::<Vec<_>>());
        }
        obj
    }
}

#[derive(Clone, Debug)]
pub struct EigenRecurrence {
    pub a: Rational,
    pub b: Rational,
    pub roots: [RootInterval; 3],
    pub triples: Vec<EigenTriple>,
    pub in_paper_proven_region: bool,
}

/// Eigenvalues of `M(0..=max_n)` generated by the scalar recurrence
/// `λ(n) = c(n)·λ(n−2) + λ(n−3)` from `λ(0) = 1`, `λ(1)` = roots of
/// `λ³ − aλ − 1` and `λ(2) = λ(1)²`. Requires `a >= 2`.
pub fn eigen_recurrence(max_n: usize, a: &Rational, b: &Rational, tol: f64) -> Result<EigenRecurrence> {
    if *a < int_rational(2) {
        return Err(Error::ParamOutOfProvenRegion { a: render_rational(a) });
    }
    eigen_recurrence_extended(max_n, a, b, tol)
}

/// As [`eigen_recurrence`] but for any `a` with three distinct real roots;
/// the result is flagged when `a < 2`.
pub fn eigen_recurrence_extended(
    max_n: usize,
    a: &Rational,
    b: &Rational,
    tol: f64,
) -> Result<EigenRecurrence> {
    let params = BiPeriodicParams::numeric(a.clone(), b.clone())?;
    let roots = isolate_roots(a, tol)?;
    let seeds = roots.clone().map(|r| r.refined);
    let exact_seeds = surd_roots(&mp1_char_poly(a));

    let float_seq = scalar_recurrence(max_n, seeds, |n| rational_to_f64(params.coefficient(n)));
    let exact_seq = exact_seeds.map(|s| {
        scalar_recurrence(max_n, s, |n| QuadraticSurd::from_rational(params.coefficient(n).clone()))
    });
    let triples = (0..=max_n)
        .map(|n| EigenTriple {
            n,
            values: float_seq[n],
            exact: exact_seq.as_ref().map(|e| e[n].clone()),
        })
        .collect();
    Ok(EigenRecurrence {
        a: a.clone(),
        b: b.clone(),
        roots,
        triples,
        in_paper_proven_region: *a >= int_rational(2),
    })
}

fn scalar_recurrence<T>(max_n: usize, seeds: [T; 3], coeff: impl Fn(u64) -> T) -> Vec<[T; 3]>
where
    T: Clone + One + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    let mut out: Vec<[T; 3]> = vec![
        [T::one(), T::one(), T::one()],
        seeds.clone(),
        seeds.map(|x| x.clone() * x),
    ];
    for n in 3..=max_n {
        let c = coeff(n as u64);
        let next = std::array::from_fn(|i| c.clone() * out[n - 2][i].clone() + out[n - 3][i].clone());
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

/// `|χ(x)| / max(1, |x|³)` with `χ` evaluated exactly at the float `x`.
pub fn relative_residual(poly: &CubicPoly<Rational>, x: f64) -> f64 {
    let exact = f64_to_rational(x).expect("finite eigenvalue");
    let value = rational_to_f64(&poly.eval(&exact).abs());
    value / 1f64.max(x.abs().powi(3))
}

/// Every recurrence-generated eigenvalue must be a root of `χ_{M(n)}`:
/// relative residual `<= bound` for floats, exactly zero for the ℚ(√5)
/// layer, and the two layers agree to `1e-12` relative.
pub fn check_eigen_recurrence(rec: &EigenRecurrence, bound: f64, report: &mut Report) {
    let params = BiPeriodicParams::numeric(rec.a.clone(), rec.b.clone()).expect("validated");
    let mut seq = MpSequence::new(params);
    for triple in &rec.triples {
        let poly = seq.get(triple.n).char_poly();
        for (i, &x) in triple.values.iter().enumerate() {
            let rel = relative_residual(&poly, x);
            report.check(rel <= bound, || {
                Failure::at(triple.n as i64, format!("<= {bound:e}"), format!("{rel:e}"), format!("relative residual of λ_{i}"))
            });
        }
        if let Some(exact) = &triple.exact {
            let surd_poly = poly.map(|c| QuadraticSurd::from_rational(c.clone()));
            for (i, x) in exact.iter().enumerate() {
                let value = surd_poly.eval(x);
                report.check(value.is_zero(), || {
                    Failure::at(triple.n as i64, "0", &value, format!("exact χ(λ_{i})"))
                });
                let (xf, yf) = (x.to_f64(), triple.values[i]);
                report.check((xf - yf).abs() <= 1e-12 * 1f64.max(xf.abs()), || {
                    Failure::at(triple.n as i64, xf, yf, format!("float vs exact λ_{i}"))
                });
            }
        }
    }
}

/// Exact diagonalizability of each `M(n)`, `n <= max_n`.
pub fn check_diagonalizable(seq: &mut MpSequence<Rational>, max_n: usize, report: &mut Report) {
    for n in 0..=max_n {
        let (disc, class, diag) = classify_matrix(seq.get(n));
        report.check(diag, || {
            Failure::at(n as i64, "diagonalizable", format!("{class} (discriminant {disc})"), "M(n) over ℝ")
        });
    }
}

/// `Tr(M(1)^n) = L(n) + (−1)^n` at `a = 2`, exact, `0 <= n <= max_n`.
pub fn trace_lucas_check(max_n: u64) -> Report {
    let mut report = Report::new("2.8", max_n).with_params(&int_rational(2), &int_rational(1));
    check_trace_lucas(max_n, &mut report);
    report.finish()
}

pub fn check_trace_lucas(max_n: u64, report: &mut Report) {
    let m1 = mp1_matrix(&int_rational(2)).map(|x| x.to_integer());
    let mut power = Mat3::identity();
    for n in 0..=max_n {
        let trace = power.trace();
        power = power.matmul(&m1);
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let expected = lucas(n) + sign;
        report.check(trace == expected, || Failure::at(n as i64, &expected, &trace, "Tr(M(1)^n) = L(n) + (-1)^n"));
    }
}

/// Power sums `t(n) = Tr(M(1)^n)` obey `t(n) = a·t(n−2) + t(n−3)` with
/// `t(0) = 3, t(1) = 0, t(2) = 2a`.
pub fn trace_sequence_check(max_n: u64, a: &Rational) -> Report {
    let mut report = Report::new("trace-sequence", max_n).with_param("a", render_rational(a));
    check_trace_sequence(max_n, a, &mut report);
    report.finish()
}

pub fn trace_sequence(max_n: u64, a: &Rational) -> Vec<Rational> {
    let mut t = vec![int_rational(3), Rational::zero(), int_rational(2) * a];
    for n in 3..=max_n as usize {
        let next = a * &t[n - 2] + &t[n - 3];
        t.push(next);
    }
    t.truncate(max_n as usize + 1);
    t
}

pub fn check_trace_sequence(max_n: u64, a: &Rational, report: &mut Report) {
    let m1 = mp1_matrix(a);
    let expected = trace_sequence(max_n, a);
    let mut power = Mat3::identity();
    for (n, t) in expected.iter().enumerate() {
        let trace = power.trace();
        report.check(&trace == t, || Failure::at(n as i64, t, &trace, "power-sum recurrence"));
        power = power.matmul(&m1);
    }
}

/// `Tr(P·A·P⁻¹) = Tr(A)` for `A = M(1)^l`, `l <= max_l`, and a fixed
/// invertible rational `P`.
pub fn check_trace_similarity(a: &Rational, max_l: u64, report: &mut Report) {
    let p = Mat3::from_rows([
        [int_rational(2), int_rational(1), Rational::zero()],
        [Rational::zero(), int_rational(-1), int_rational(3)],
        [Rational::one(), Rational::zero(), crate::exact_arith::rational(1, 2)],
    ]);
    let p_inv = p.inverse().expect("invertible");
    let m1 = mp1_matrix(a);
    for l in 0..=max_l {
        let base = m1.pow(l);
        let conj = p.matmul(&base).matmul(&p_inv);
        report.check(conj.trace() == base.trace(), || {
            Failure::at(l as i64, base.trace(), conj.trace(), "Tr(P·A·P⁻¹) = Tr(A)")
        });
    }
}

/// Roots of `χ_{M(1)^l}` equal the `l`-th powers of the roots of
/// `λ³ − aλ − 1`, as sorted multisets, to `tol` relative.
pub fn check_power_eigenvalues(a: &Rational, max_l: u64, tol: f64, report: &mut Report) -> Result<()> {
    let base = isolate_roots(a, DEFAULT_TOL)?;
    let m1 = mp1_matrix(a);
    for l in 1..=max_l {
        let poly = m1.pow(l).char_poly();
        let found: Vec<f64> = real_root_intervals(&poly, DEFAULT_TOL).iter().map(|r| r.refined).collect();
        let mut expected: Vec<f64> = base.iter().map(|r| r.refined.powi(l as i32)).collect();
        expected.sort_by(f64::total_cmp);
        let ok = found.len() == 3
            && found
                .iter()
                .zip(&expected)
                .all(|(x, y)| (x - y).abs() <= tol * 1f64.max(y.abs()));
        report.check(ok, || Failure::at(l as i64, format!("{expected:?}"), format!("{found:?}"), "eigenvalues of M(1)^l"));
    }
    Ok(())
}

/// Off-diagonal mass of `V⁻¹·M(n)·V` relative to `max(1, max |diag|)`,
/// where the columns of `V` are the eigenvectors `(1, λ, λ²)` of `M(1)`.
pub fn simdiag_residues(a: &Rational, b: &Rational, max_n: usize) -> Result<Vec<(f64, [f64; 3])>> {
    let params = BiPeriodicParams::numeric(a.clone(), b.clone())?;
    let roots = isolate_roots(a, DEFAULT_TOL)?;
    let lambda = roots.map(|r| r.refined);
    let v = Mat3::from_fn(|i, j| lambda[j].powi(i as i32));
    let t = v.inverse().expect("distinct eigenvalues give an invertible Vandermonde matrix");
    let mut seq = MpSequence::new(params);
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let m = seq.get(n).map(rational_to_f64);
        let d = t.matmul(&m).matmul(&v);
        let diag = [*d.get(0, 0), *d.get(1, 1), *d.get(2, 2)];
        let scale = diag.iter().fold(1f64, |s, x| s.max(x.abs()));
        let off = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .fold(0f64, |s, (i, j)| s.max(d.get(i, j).abs()));
        out.push((off / scale, diag));
    }
    Ok(out)
}

/// One numeric `T` (inverse eigenvector matrix of `M(1)`) diagonalizes
/// every `M(n)`, `n <= max_n`, with relative off-diagonal residue `<= tol`,
/// and its diagonal matches the recurrence eigenvalues.
pub fn simdiag_witness_check(a: &Rational, b: &Rational, max_n: usize, tol: f64) -> Result<Report> {
    let mut report = Report::new("simdiag", max_n as u64).with_params(a, b);
    check_simdiag(a, b, max_n, tol, &mut report)?;
    Ok(report.finish())
}

pub fn check_simdiag(a: &Rational, b: &Rational, max_n: usize, tol: f64, report: &mut Report) -> Result<()> {
    let residues = simdiag_residues(a, b, max_n)?;
    let rec = eigen_recurrence_extended(max_n, a, b, DEFAULT_TOL)?;
    for (n, (rel, diag)) in residues.iter().enumerate() {
        report.check(*rel <= tol, || Failure::at(n as i64, format!("<= {tol:e}"), format!("{rel:e}"), "off-diagonal residue of T·M(n)·T⁻¹"));
        let lambdas = rec.triples[n].values;
        let scale = lambdas.iter().fold(1f64, |s, x| s.max(x.abs()));
        let agree = diag.iter().zip(lambdas).all(|(d, l)| (d - l).abs() <= tol * scale);
        report.check(agree, || Failure::at(n as i64, format!("{lambdas:?}"), format!("{diag:?}"), "diagonal vs recurrence eigenvalues"));
    }
    Ok(())
}

/// Exact eigenvalues of `M(1)` and `M(2)` at `a = 2` in ℚ(√5).
pub fn exact_low_spectra_at_two() -> Option<([QuadraticSurd; 3], [QuadraticSurd; 3])> {
    let params = BiPeriodicParams::numeric(int_rational(2), int_rational(1)).ok()?;
    let [_, m1, m2] = mp_initial(&params);
    Some((surd_roots(&m1.char_poly())?, surd_roots(&m2.char_poly())?))
}
