//! The `verify` suites. Each suite is a pure function of its options and
//! returns one [`Report`].

use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exact_arith::{
    f64_to_rational, int_rational, rational, rational_to_f64, BivariatePoly, QuadraticSurd, Rational,
};
use crate::matrix3::Mat3;
use crate::padovan_matrices::{
    check_adjacent_commutation, check_all_pairs_commutation, check_b_powers, check_group_laws,
    check_power_identities, check_q_growth, check_q_powers, check_recurrence, q_matrix, MpSequence,
};
use crate::report::{Failure, Report};
use crate::sequences::{binet_fibonacci, binet_lucas, fibonacci, lucas, BiPeriodicParams};
use crate::spectra::{
    check_diagonalizable, check_eigen_recurrence, check_power_eigenvalues, check_simdiag,
    check_trace_lucas, check_trace_sequence, check_trace_similarity, classify_matrix,
    eigen_recurrence_extended, exact_low_spectra_at_two, isolate_roots, mp1_char_poly, mp1_verdict,
    sign_pattern_seeds, RootClass, RESIDUAL_BOUND,
};

/// Suite identifiers in report emission order.
pub const SUITE_IDS: [&str; 10] = ["2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.8", "2.9", "binet", "qn"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    AdjacentCommutation,
    SpectrumAtTwo,
    AllPairsCommutation,
    RootIsolation,
    SpectrumAboveTwo,
    PowerIdentities,
    TraceLucas,
    GroupB,
    Binet,
    QPowers,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::AdjacentCommutation,
        Suite::SpectrumAtTwo,
        Suite::AllPairsCommutation,
        Suite::RootIsolation,
        Suite::SpectrumAboveTwo,
        Suite::PowerIdentities,
        Suite::TraceLucas,
        Suite::GroupB,
        Suite::Binet,
        Suite::QPowers,
    ];

    pub fn id(self) -> &'static str {
        SUITE_IDS[Suite::ALL.iter().position(|s| *s == self).expect("listed")]
    }

    pub fn default_max_n(self) -> u64 {
        match self {
            Suite::AdjacentCommutation => 20,
            Suite::SpectrumAtTwo => 20,
            Suite::AllPairsCommutation => 12,
            Suite::RootIsolation => 0,
            Suite::SpectrumAboveTwo => 20,
            Suite::PowerIdentities => 4,
            Suite::TraceLucas => 500,
            Suite::GroupB => 100,
            Suite::Binet => 300,
            Suite::QPowers => 200,
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SUITE_IDS
            .iter()
            .position(|id| *id == s)
            .map(|i| Suite::ALL[i])
            .ok_or_else(|| format!("unknown suite `{s}` (expected all or one of {})", SUITE_IDS.join(", ")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides every suite's default depth when set.
    pub max_n: Option<u64>,
    pub a: Rational,
    pub b: Rational,
    pub tol: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            max_n: None,
            a: int_rational(2),
            b: int_rational(1),
            tol: crate::spectra::DEFAULT_TOL,
        }
    }
}

impl SuiteOptions {
    /// Rejects zero parameters up front, so suites never see them.
    pub fn validate(&self) -> Result<()> {
        BiPeriodicParams::numeric(self.a.clone(), self.b.clone()).map(|_| ())
    }

    fn params(&self) -> BiPeriodicParams<Rational> {
        BiPeriodicParams::numeric(self.a.clone(), self.b.clone()).expect("validated")
    }
}

/// Extra parameter pairs checked numerically by the commutation suites.
const COMMUTATION_SPOTS: [(i64, i64); 3] = [(2, 1), (2, 3), (3, -2)];

/// Values of `a` sampled by the isolation and `a > 2` suites.
pub fn sampled_a() -> [Rational; 4] {
    [int_rational(2), rational(5, 2), int_rational(3), int_rational(10)]
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Report> {
    opts.validate()?;
    let max_n = opts.max_n.unwrap_or_else(|| suite.default_max_n());
    let report = Report::new(suite.id(), max_n).with_params(&opts.a, &opts.b);
    Ok(match suite {
        Suite::AdjacentCommutation => adjacent_commutation(max_n as usize, opts, report),
        Suite::SpectrumAtTwo => spectrum_at_two(max_n as usize, opts, report),
        Suite::AllPairsCommutation => all_pairs_commutation(max_n as usize, opts, report),
        Suite::RootIsolation => root_isolation(opts, report),
        Suite::SpectrumAboveTwo => spectrum_above_two(max_n as usize, opts, report),
        Suite::PowerIdentities => power_identities(max_n as usize, opts, report),
        Suite::TraceLucas => trace_lucas(max_n, opts, report),
        Suite::GroupB => group_b(max_n as i64, opts, report),
        Suite::Binet => binet(max_n, report),
        Suite::QPowers => q_powers(max_n as i64, report),
    }
    .finish())
}

/// Runs the given suites on scoped threads; reports come back in the order
/// the suites were given.
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Result<Vec<Report>> {
    opts.validate()?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| scope.spawn(move || run_suite(suite, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn adjacent_commutation(max_n: usize, opts: &SuiteOptions, mut report: Report) -> Report {
    let mut sym = MpSequence::symbolic();
    check_adjacent_commutation(&mut sym, max_n, &mut report);
    check_recurrence(&mut sym, max_n + 1, &mut report);
    let (a, o, l) = (BivariatePoly::a(), BivariatePoly::zero(), BivariatePoly::constant(1.into()));
    let shown = Mat3::from_rows([
        [l.clone(), a.clone(), o.clone()],
        [o.clone(), l.clone(), a.clone()],
        [a.clone(), &a * &a, l],
    ]);
    sym.ensure(2);
    let product = sym.cached()[1].matmul(&sym.cached()[2]);
    report.check(product == shown, || Failure::pair(1, 2, &shown, &product, "M(1)·M(2)"));
    check_adjacent_commutation(&mut MpSequence::new(opts.params()), max_n, &mut report);
    report
}

fn all_pairs_commutation(max_n: usize, opts: &SuiteOptions, mut report: Report) -> Report {
    check_all_pairs_commutation(&mut MpSequence::symbolic(), max_n, &mut report);
    let numeric_n = max_n.max(20);
    let spots = COMMUTATION_SPOTS
        .iter()
        .map(|&(a, b)| (int_rational(a), int_rational(b)))
        .chain(std::iter::once((opts.a.clone(), opts.b.clone())));
    for (a, b) in spots {
        let params = BiPeriodicParams::numeric(a, b).expect("nonzero");
        check_all_pairs_commutation(&mut MpSequence::new(params), numeric_n, &mut report);
    }
    report
}

/// Exact ℚ(√5) spectra of `M(1)`, `M(2)` at `a = 2`, diagonalizability of
/// every `M(n)`, the eigenvalue recurrence and the simultaneous
/// diagonalization witness at `(2, b)`.
fn spectrum_at_two(max_n: usize, opts: &SuiteOptions, mut report: Report) -> Report {
    report = report.with_param("a", "2");
    let two = int_rational(2);
    let half = rational(1, 2);
    let surd = |r: Rational, c: Rational| QuadraticSurd::new(r, c);
    let want_m1 = [
        surd(int_rational(-1), Rational::zero()),
        surd(half.clone(), -half.clone()),
        surd(half.clone(), half.clone()),
    ];
    let want_m2 = [
        surd(rational(3, 2), -half.clone()),
        surd(int_rational(1), Rational::zero()),
        surd(rational(3, 2), half),
    ];
    match exact_low_spectra_at_two() {
        Some((m1, m2)) => {
            report.check(m1 == want_m1, || Failure::at(1, fmt_surds(&want_m1), fmt_surds(&m1), "exact spectrum of M(1)"));
            report.check(m2 == want_m2, || Failure::at(2, fmt_surds(&want_m2), fmt_surds(&m2), "exact spectrum of M(2)"));
        }
        None => report.record(Failure::at(1, fmt_surds(&want_m1), "no roots in Q(sqrt 5)", "exact spectrum of M(1)")),
    }
    let params = BiPeriodicParams::numeric(two.clone(), opts.b.clone()).expect("nonzero");
    check_diagonalizable(&mut MpSequence::new(params), max_n, &mut report);
    eigen_checks(&two, &opts.b, max_n, &mut report);
    simdiag_checks(&two, &opts.b, max_n, &mut report);
    report
}

/// Isolation on the sampled `a`: disjoint brackets from the sign pattern,
/// residual `<= 1e-9`, width `<= tol`; plus the complex cases (`a = 1` and
/// `Q`) and the discriminant/isolation coherence on a grid.
fn root_isolation(opts: &SuiteOptions, mut report: Report) -> Report {
    let samples: Vec<Rational> = sampled_a().into_iter().chain(std::iter::once(opts.a.clone())).collect();
    for a in &samples {
        let ctx = format!("a = {a}");
        let f = mp1_char_poly(a);
        if *a > int_rational(2) {
            report.check(sign_pattern_seeds(a).is_some(), || {
                Failure::at(0, "f(-a)<0, f(-1)>0, f(0)<0, f(a)>0", "pattern broken", ctx.clone())
            });
        }
        if !mp1_verdict(a).discriminant.is_positive() {
            continue;
        }
        match isolate_roots(a, opts.tol) {
            Ok(roots) => {
                for (i, r) in roots.iter().enumerate() {
                    let value = f64_to_rational(r.refined).map(|x| f.eval(&x).abs()).unwrap_or_default();
                    let value = rational_to_f64(&value);
                    report.check(value <= RESIDUAL_BOUND, || {
                        Failure::at(i as i64, "|f(root)| <= 1e-9", format!("{value:e}"), ctx.clone())
                    });
                    let width = rational_to_f64(&r.width());
                    report.check(width <= opts.tol, || {
                        Failure::at(i as i64, format!("width <= {:e}", opts.tol), format!("{width:e}"), ctx.clone())
                    });
                }
                for (i, w) in roots.windows(2).enumerate() {
                    report.check(w[0].hi < w[1].lo, || {
                        Failure::at(i as i64, "disjoint intervals", format!("{} >= {}", w[0].hi, w[1].lo), ctx.clone())
                    });
                }
                if let Some(seeds) = sign_pattern_seeds(a).filter(|_| *a > int_rational(2)) {
                    for (i, r) in roots.iter().enumerate() {
                        let inside = seeds[i] <= r.lo && r.hi <= seeds[i + 1];
                        report.check(inside, || {
                            Failure::at(i as i64, format!("inside [{}, {}]", seeds[i], seeds[i + 1]), format!("[{}, {}]", r.lo, r.hi), ctx.clone())
                        });
                    }
                }
            }
            Err(e) => report.record(Failure::at(0, "three isolated roots", e, ctx)),
        }
    }

    let one = mp1_verdict(&int_rational(1));
    report.check(
        one.classification == RootClass::OneRealTwoComplex && !one.diagonalizable_over_r,
        || Failure::at(1, "OneRealTwoComplex, not diagonalizable", one.classification, "a = 1"),
    );
    let q = q_matrix().map(|x| Rational::from_integer(x.clone()));
    let (_, q_class, q_diag) = classify_matrix(&q);
    report.check(q_class == RootClass::OneRealTwoComplex && !q_diag, || {
        Failure::at(0, "OneRealTwoComplex, not diagonalizable", q_class, "Q")
    });

    // ThreeDistinctReal exactly when isolation succeeds.
    let grid = [
        int_rational(-3), int_rational(-1), rational(1, 2), int_rational(1), rational(3, 2),
        rational(189, 100), rational(19, 10), int_rational(2), rational(7, 3), int_rational(50),
    ];
    for a in grid {
        let class = mp1_verdict(&a).classification;
        let isolated = isolate_roots(&a, opts.tol).is_ok();
        report.check((class == RootClass::ThreeDistinctReal) == isolated, || {
            Failure::at(0, format!("{class}"), format!("isolation ok = {isolated}"), format!("a = {a}"))
        });
    }
    report
}

/// For each sampled `a > 2` (and the requested `a` when `>= 2`): every
/// `M(n)` diagonalizable, eigenvalue recurrence residuals, and the
/// simultaneous diagonalization witness.
fn spectrum_above_two(max_n: usize, opts: &SuiteOptions, mut report: Report) -> Report {
    let mut samples: Vec<Rational> = sampled_a().into_iter().filter(|a| *a > int_rational(2)).collect();
    if opts.a >= int_rational(2) && !samples.contains(&opts.a) {
        samples.push(opts.a.clone());
    }
    for a in &samples {
        let params = BiPeriodicParams::numeric(a.clone(), opts.b.clone()).expect("nonzero");
        check_diagonalizable(&mut MpSequence::new(params), max_n, &mut report);
        eigen_checks(a, &opts.b, max_n, &mut report);
        simdiag_checks(a, &opts.b, max_n, &mut report);
    }
    report
}

fn eigen_checks(a: &Rational, b: &Rational, max_n: usize, report: &mut Report) {
    match eigen_recurrence_extended(max_n, a, b, crate::spectra::DEFAULT_TOL) {
        Ok(rec) => check_eigen_recurrence(&rec, RESIDUAL_BOUND, report),
        Err(e) => report.record(Failure::at(0, "eigenvalue recurrence", e, format!("a = {a}, b = {b}"))),
    }
}

fn simdiag_checks(a: &Rational, b: &Rational, max_n: usize, report: &mut Report) {
    if let Err(e) = check_simdiag(a, b, max_n, RESIDUAL_BOUND, report) {
        report.record(Failure::at(0, "diagonalizing T", e, format!("a = {a}, b = {b}")));
    }
}

fn power_identities(max_n: usize, opts: &SuiteOptions, mut report: Report) -> Report {
    check_power_identities(&mut report);
    let mut sym = MpSequence::symbolic();
    check_recurrence(&mut sym, max_n, &mut report);
    // The same identities at the requested numeric parameters.
    let mut seq = MpSequence::new(opts.params());
    let m1 = seq.get(1).clone();
    for k in [2usize, 4] {
        let power = m1.pow(k as u64);
        let m = seq.get(k);
        report.check(&power == m, || Failure::at(k as i64, m, &power, "M(1)^k = M(k), numeric"));
    }
    report
}

/// The trace–Lucas identity at `a = 2` plus the trace facts for the
/// requested `a`: power-sum recurrence, similarity invariance and the
/// eigenvalues of powers (for `a >= 2` and the sampled values).
fn trace_lucas(max_n: u64, opts: &SuiteOptions, mut report: Report) -> Report {
    check_trace_lucas(max_n, &mut report);
    check_trace_sequence(max_n.min(200), &opts.a, &mut report);
    check_trace_similarity(&opts.a, 6, &mut report);
    let mut samples: Vec<Rational> = sampled_a().to_vec();
    if opts.a >= int_rational(2) && !samples.contains(&opts.a) {
        samples.push(opts.a.clone());
    }
    for a in &samples {
        if let Err(e) = check_power_eigenvalues(a, 6, RESIDUAL_BOUND, &mut report) {
            report.record(Failure::at(0, "eigenvalues of M(1)^l", e, format!("a = {a}")));
        }
    }
    report
}

fn group_b(max_n: i64, opts: &SuiteOptions, mut report: Report) -> Report {
    let sym = BiPeriodicParams::symbolic();
    check_b_powers(max_n, &sym, &mut report);
    check_group_laws(max_n.min(20), sym.a(), &mut report);
    check_b_powers(max_n, &opts.params(), &mut report);
    report
}

fn binet(max_n: u64, mut report: Report) -> Report {
    for n in 0..=max_n {
        match binet_fibonacci(n) {
            Ok(v) => {
                let want = fibonacci(n);
                report.check(v == want, || Failure::at(n as i64, &want, &v, "Binet Fibonacci"));
            }
            Err(e) => report.record(Failure::at(n as i64, fibonacci(n), e, "Binet Fibonacci")),
        }
        match binet_lucas(n) {
            Ok(v) => {
                let want = lucas(n);
                report.check(v == want, || Failure::at(n as i64, &want, &v, "Binet Lucas"));
            }
            Err(e) => report.record(Failure::at(n as i64, lucas(n), e, "Binet Lucas")),
        }
    }
    report
}

fn q_powers(max_n: i64, mut report: Report) -> Report {
    check_q_powers(max_n, &mut report);
    check_q_growth(max_n, &mut report);
    report
}

fn fmt_surds(values: &[QuadraticSurd; 3]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Maps `--prop` to suites: `all` or a single id.
pub fn select(prop: &str) -> std::result::Result<Vec<Suite>, String> {
    if prop == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        prop.parse().map(|s| vec![s])
    }
}
