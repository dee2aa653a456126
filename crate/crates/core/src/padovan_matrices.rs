//! The generating matrix `Q`, the bi-periodic matrix sequence `M(n)`,
//! the matrix `B = Q·M(1)` and the cyclic group of its powers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::{BivariatePoly, Integer, Rational, Scalar};
use crate::matrix3::Mat3;
use crate::report::{Failure, Report};
use crate::sequences::{padovan, BiPeriodicParams, PadovanConvention};

/// `[[0, 1, 1], [1, 0, 0], [0, 1, 0]]`.
pub fn q_matrix() -> Mat3<Integer> {
    q_matrix_in()
}

/// `Q` over any scalar ring.
pub fn q_matrix_in<R: Scalar>() -> Mat3<R> {
    int_matrix([[0, 1, 1], [1, 0, 0], [0, 1, 0]])
}

fn int_matrix<R: Scalar>(rows: [[i64; 3]; 3]) -> Mat3<R> {
    Mat3::from_rows(rows.map(|r| r.map(R::from_i64)))
}

/// `Q^n` assembled from classic Padovan numbers, without any matrix
/// products:
///
/// ```text
/// [p(n-2) p(n-1) p(n-3)]
/// [p(n-3) p(n-2) p(n-4)]
/// [p(n-4) p(n-3) p(n-5)]
/// ```
///
/// Small `n` reaches into negative Padovan indices. `n <= 0` is rejected.
pub fn q_power_formula(n: i64) -> Result<Mat3<Integer>> {
    if n < 1 {
        return Err(Error::IndexOutOfRange {
            index: n,
            reason: "the Q^n entry formula is defined for n >= 1",
        });
    }
    let p = |k: i64| padovan(n + k, PadovanConvention::Classic);
    Ok(Mat3::from_rows([
        [p(-2), p(-1), p(-3)],
        [p(-3), p(-2), p(-4)],
        [p(-4), p(-3), p(-5)],
    ]))
}

/// `M(0) = I`, `M(1) = [[0,1,0],[0,0,1],[1,a,0]]`,
/// `M(2) = [[0,0,1],[1,a,0],[0,1,a]]`.
pub fn mp_initial<R: Scalar>(params: &BiPeriodicParams<R>) -> [Mat3<R>; 3] {
    let (o, l) = (R::zero(), R::one());
    let a = params.a().clone();
    [
        Mat3::identity(),
        Mat3::from_rows([
            [o.clone(), l.clone(), o.clone()],
            [o.clone(), o.clone(), l.clone()],
            [l.clone(), a.clone(), o.clone()],
        ]),
        Mat3::from_rows([
            [o.clone(), o.clone(), l.clone()],
            [l.clone(), a.clone(), o.clone()],
            [o, l, a],
        ]),
    ]
}

/// Lazily extended `M(0), M(1), …` with
/// `M(n) = c(n)·M(n-2) + M(n-3)`, `c(n) = a` for even `n` and `b` for odd.
///
/// Growing the cache needs `&mut self`, so a sequence is confined to one
/// task; share the finished prefix through [`MpSequence::cached`].
#[derive(Clone, Debug)]
pub struct MpSequence<R> {
    params: BiPeriodicParams<R>,
    cache: Vec<Mat3<R>>,
}

impl<R: Scalar> MpSequence<R> {
    pub fn new(params: BiPeriodicParams<R>) -> Self {
        let cache = mp_initial(&params).to_vec();
        Self { params, cache }
    }

    pub fn params(&self) -> &BiPeriodicParams<R> {
        &self.params
    }

    pub fn ensure(&mut self, n: usize) {
        while self.cache.len() <= n {
            let k = self.cache.len();
            let c = self.params.coefficient(k as u64);
            let next = self.cache[k - 2].scale(c) + self.cache[k - 3].clone();
            self.cache.push(next);
        }
    }

    pub fn get(&mut self, n: usize) -> &Mat3<R> {
        self.ensure(n);
        &self.cache[n]
    }

    pub fn cached(&self) -> &[Mat3<R>] {
        &self.cache
    }
}

impl MpSequence<BivariatePoly> {
    pub fn symbolic() -> Self {
        Self::new(BiPeriodicParams::symbolic())
    }
}

pub fn mp<R: Scalar>(n: usize, params: &BiPeriodicParams<R>) -> Mat3<R> {
    let mut seq = MpSequence::new(params.clone());
    seq.get(n).clone()
}

/// Checks that every cached `M(n)`, `3 <= n <= max_n`, satisfies the parity
/// recurrence.
pub fn check_recurrence<R: Scalar>(seq: &mut MpSequence<R>, max_n: usize, report: &mut Report) {
    seq.ensure(max_n);
    let cache = seq.cached();
    for n in 3..=max_n {
        let c = seq.params().coefficient(n as u64);
        let expected = cache[n - 2].scale(c) + cache[n - 3].clone();
        report.check(expected == cache[n], || {
            Failure::at(n as i64, &expected, &cache[n], "parity recurrence")
        });
    }
}

pub fn check_adjacent_commutation<R: Scalar>(
    seq: &mut MpSequence<R>,
    max_n: usize,
    report: &mut Report,
) {
    seq.ensure(max_n + 1);
    let cache = seq.cached();
    for n in 0..=max_n {
        let comm = cache[n].commutator(&cache[n + 1]);
        report.check(comm.is_zero(), || {
            Failure::pair(n as i64, n as i64 + 1, "zero commutator", &comm, "M(n)·M(n+1) − M(n+1)·M(n)")
        });
    }
}

pub fn check_all_pairs_commutation<R: Scalar>(
    seq: &mut MpSequence<R>,
    max_n: usize,
    report: &mut Report,
) {
    seq.ensure(max_n);
    let cache = seq.cached();
    for n in 0..=max_n {
        for m in (n + 1)..=max_n {
            let comm = cache[n].commutator(&cache[m]);
            report.check(comm.is_zero(), || {
                Failure::pair(n as i64, m as i64, "zero commutator", &comm, "M(n)·M(m) − M(m)·M(n)")
            });
        }
    }
}

/// `M(n)` and `M(n+1)` commute for all `n <= max_n`.
pub fn verify_adjacent_commutation<R: Scalar>(max_n: usize, params: &BiPeriodicParams<R>) -> Report {
    let mut report = Report::new("2.1", max_n as u64);
    check_adjacent_commutation(&mut MpSequence::new(params.clone()), max_n, &mut report);
    report.finish()
}

/// `M(n)` and `M(m)` commute for all `n, m <= max_n`.
pub fn verify_all_pairs_commutation<R: Scalar>(max_n: usize, params: &BiPeriodicParams<R>) -> Report {
    let mut report = Report::new("2.3", max_n as u64);
    check_all_pairs_commutation(&mut MpSequence::new(params.clone()), max_n, &mut report);
    report.finish()
}

/// `B = Q·M(1)`.
pub fn b_matrix<R: Scalar>(params: &BiPeriodicParams<R>) -> Mat3<R> {
    q_matrix_in::<R>().matmul(&mp_initial(params)[1])
}

/// `[[1, n·a, n], [0, 1, 0], [0, 0, 1]]` for any integer `n`.
pub fn b_power_closed<R: Scalar>(n: i64, a: &R) -> Mat3<R> {
    let (o, l) = (R::zero(), R::one());
    let nn = R::from_i64(n);
    Mat3::from_rows([
        [l.clone(), nn.clone() * a.clone(), nn],
        [o.clone(), l.clone(), o.clone()],
        [o.clone(), o, l],
    ])
}

/// `B⁻¹ = [[1, -a, -1], [0, 1, 0], [0, 0, 1]]`.
pub fn b_inverse<R: Scalar>(a: &R) -> Mat3<R> {
    b_power_closed(-1, a)
}

/// Element `B^n` of the group `G = {B^n : n ∈ ℤ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElementB<R> {
    pub n: i64,
    pub a: R,
}

impl<R: Scalar> GroupElementB<R> {
    pub fn new(n: i64, a: R) -> Self {
        Self { n, a }
    }

    pub fn identity(a: R) -> Self {
        Self::new(0, a)
    }

    pub fn matrix(&self) -> Mat3<R> {
        b_power_closed(self.n, &self.a)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.n + other.n, self.a.clone())
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.n, self.a.clone())
    }
}

/// Closed form of `B^n` against repeated multiplication by `B` (n ≥ 0) or
/// by the displayed `B⁻¹` (n < 0), for `|n| <= max_n`.
pub fn check_b_powers<R: Scalar>(max_n: i64, params: &BiPeriodicParams<R>, report: &mut Report) {
    let b = b_matrix(params);
    let a = params.a();
    let b_inv = b_inverse(a);
    report.check(b.matmul(&b_inv) == Mat3::identity() && b_inv.matmul(&b) == Mat3::identity(), || {
        Failure::at(-1, "I", b.matmul(&b_inv), "B·B⁻¹")
    });
    report.check(b == b_power_closed(1, a), || Failure::at(1, b_power_closed(1, a), &b, "B = Q·M(1)"));
    let mut forward = Mat3::identity();
    let mut backward = Mat3::identity();
    for n in 0..=max_n {
        let closed = b_power_closed(n, a);
        report.check(closed == forward, || Failure::at(n, &forward, &closed, "B^n closed form"));
        report.check(closed == b.pow(n as u64), || Failure::at(n, b.pow(n as u64), &closed, "mat_pow(B, n)"));
        let closed_neg = b_power_closed(-n, a);
        report.check(closed_neg == backward, || {
            Failure::at(-n, &backward, &closed_neg, "(B⁻¹)^n closed form")
        });
        report.check(closed_neg == b_inv.pow(n as u64), || {
            Failure::at(-n, b_inv.pow(n as u64), &closed_neg, "mat_pow(B⁻¹, n)")
        });
        forward = forward.matmul(&b);
        backward = backward.matmul(&b_inv);
    }
}

/// Group laws of `G` for `|n|, |m| <= max_n`: closure with index addition,
/// identity, inverses, commutativity and associativity on a diagonal slice.
pub fn check_group_laws<R: Scalar>(max_n: i64, a: &R, report: &mut Report) {
    let id = GroupElementB::identity(a.clone());
    let id_matrix = id.matrix();
    report.check(id_matrix == Mat3::identity(), || Failure::at(0, "I", &id_matrix, "B^0"));
    for n in -max_n..=max_n {
        let x = GroupElementB::new(n, a.clone());
        let xm = x.matrix();
        report.check(xm.matmul(&id_matrix) == xm && id_matrix.matmul(&xm) == xm, || {
            Failure::at(n, &xm, xm.matmul(&id_matrix), "identity law")
        });
        let inv = x.inverse().matrix();
        report.check(xm.matmul(&inv) == Mat3::identity() && inv.matmul(&xm) == Mat3::identity(), || {
            Failure::at(n, "I", xm.matmul(&inv), "inverse law")
        });
        for m in -max_n..=max_n {
            let y = GroupElementB::new(m, a.clone());
            let ym = y.matrix();
            let prod = xm.matmul(&ym);
            let composed = x.compose(&y).matrix();
            report.check(prod == composed, || Failure::pair(n, m, &composed, &prod, "closure B^n·B^m = B^(n+m)"));
            report.check(prod == ym.matmul(&xm), || Failure::pair(n, m, &prod, ym.matmul(&xm), "commutativity"));
        }
        let z = GroupElementB::new(-n / 2 + 1, a.clone()).matrix();
        let left = xm.matmul(&xm).matmul(&z);
        let right = xm.matmul(&xm.matmul(&z));
        report.check(left == right, || Failure::at(n, &left, &right, "associativity"));
    }
}

pub fn group_check<R: Scalar>(max_n: i64, a: &R) -> Report {
    let mut report = Report::new("2.9", max_n.unsigned_abs());
    check_group_laws(max_n, a, &mut report);
    report.finish()
}

/// `mat_pow(Q, n) = q_power_formula(n)` for `1 <= n <= max_n`.
pub fn check_q_powers(max_n: i64, report: &mut Report) {
    let q = q_matrix();
    let mut running = q.clone();
    for n in 1..=max_n {
        let formula = q_power_formula(n).expect("n >= 1");
        let powered = q.pow(n as u64);
        report.check(formula == powered, || Failure::at(n, &powered, &formula, "Q^n entry formula"));
        report.check(running == powered, || Failure::at(n, &running, &powered, "iterated product"));
        running = running.matmul(&q);
    }
}

/// Symbolic identities over ℤ[a, b]: `M(1)² = M(2)`, `M(1)⁴ = M(4)`,
/// `M(4)` free of `b`, and `M(1)³ = a·M(1) + I`.
pub fn check_power_identities(report: &mut Report) {
    let mut seq = MpSequence::symbolic();
    let m1 = seq.get(1).clone();
    let m2 = seq.get(2).clone();
    let m4 = seq.get(4).clone();
    let sq = m1.pow(2);
    report.check(sq == m2, || Failure::at(2, &m2, &sq, "M(1)^2 = M(2)"));
    let fourth = m1.pow(4);
    report.check(fourth == m4, || Failure::at(4, &m4, &fourth, "M(1)^4 = M(4)"));
    report.check(m4.entries().iter().all(BivariatePoly::is_b_free), || {
        Failure::at(4, "b-free entries", &m4, "M(4) = a·M(2) + M(1)")
    });
    let cubed = m1.pow(3);
    let ch = m1.scale(&BivariatePoly::a()) + Mat3::identity();
    report.check(cubed == ch, || Failure::at(3, &ch, &cubed, "Cayley-Hamilton M(1)^3 = a·M(1) + I"));
    let m1_poly = m1.char_poly();
    let residual = m1.pow(3).scale(&m1_poly.c3)
        + m1.pow(2).scale(&m1_poly.c2)
        + m1.scale(&m1_poly.c1)
        + Mat3::identity().scale(&m1_poly.c0);
    report.check(residual.is_zero(), || Failure::at(3, "0", &residual, "χ(M(1)) = 0"));
}

/// Entries of `Q^n` lie on shifted Padovan diagonals, nondecreasing in `n`
/// from `n = 5` on.
pub fn check_q_growth(max_n: i64, report: &mut Report) {
    let q = q_matrix();
    let mut prev = q.pow(5);
    for n in 6..=max_n {
        let cur = prev.matmul(&q);
        let ok = cur.entries().iter().zip(prev.entries()).all(|(c, p)| c >= p && !c.is_zero());
        report.check(ok, || Failure::at(n, &prev, &cur, "Q^n entries nondecreasing"));
        prev = cur;
    }
}

/// `M(n)` for numeric rational parameters.
pub fn mp_numeric(n: usize, a: Rational, b: Rational) -> Result<Mat3<Rational>> {
    Ok(mp(n, &BiPeriodicParams::numeric(a, b)?))
}

pub fn q_power(n: u64) -> Mat3<Integer> {
    q_matrix().pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int_rational;
    use num_bigint::BigInt;

    fn ints(rows: [[i64; 3]; 3]) -> Mat3<Integer> {
        int_matrix(rows)
    }

    #[test]
    fn q_basics() {
        let q = q_matrix();
        assert_eq!(q.det(), BigInt::from(1));
        assert!(q.trace().is_zero());
    }

    #[test]
    fn q_formula_small_powers() {
        assert_eq!(q_power_formula(1).unwrap(), q_matrix());
        let q = q_matrix();
        assert_eq!(q_power_formula(2).unwrap(), q.matmul(&q));
        assert_eq!(q_power_formula(2).unwrap(), ints([[1, 1, 0], [0, 1, 1], [1, 0, 0]]));
        assert_eq!(q_power_formula(10).unwrap(), q.pow(10));
    }

    #[test]
    fn q_formula_rejects_nonpositive() {
        assert!(matches!(q_power_formula(0), Err(Error::IndexOutOfRange { index: 0, .. })));
        assert!(q_power_formula(-3).is_err());
    }

    #[test]
    fn q_formula_agrees_with_shifted_convention_only_by_accident() {
        // The shifted convention does not reproduce Q itself.
        let p = |k: i64| padovan(1 + k, PadovanConvention::Shifted);
        let shifted = Mat3::from_rows([
            [p(-2), p(-1), p(-3)],
            [p(-3), p(-2), p(-4)],
            [p(-4), p(-3), p(-5)],
        ]);
        assert_ne!(shifted, q_matrix());
    }

    #[test]
    fn mp_initial_terms() {
        let seq = MpSequence::symbolic();
        let c = seq.cached();
        assert_eq!(c[0], Mat3::identity());
        assert_eq!(c[1].to_string(), "[0, 1, 0]\n[0, 0, 1]\n[1, a, 0]");
        assert_eq!(c[2].to_string(), "[0, 0, 1]\n[1, a, 0]\n[0, 1, a]");
    }

    #[test]
    fn mp3_is_one_odd_step() {
        let m3 = mp(3, &BiPeriodicParams::symbolic());
        assert_eq!(m3.to_string(), "[1, b, 0]\n[0, 1, b]\n[b, a*b, 1]");
    }

    #[test]
    fn mp2_is_square_of_mp1() {
        let mut seq = MpSequence::symbolic();
        let m1 = seq.get(1).clone();
        assert_eq!(&m1.pow(2), seq.get(2));
    }

    #[test]
    fn numeric_mp_rejects_zero() {
        assert_eq!(mp_numeric(3, int_rational(0), int_rational(1)).unwrap_err(), Error::ParamZero("a"));
    }

    #[test]
    fn adjacent_commutation_small() {
        assert!(verify_adjacent_commutation(0, &BiPeriodicParams::symbolic()).passed());
        assert!(verify_adjacent_commutation(2, &BiPeriodicParams::symbolic()).passed());
        let params = BiPeriodicParams::numeric(int_rational(2), int_rational(3)).unwrap();
        assert!(verify_adjacent_commutation(20, &params).passed());
    }

    #[test]
    fn all_pairs_include_identity() {
        let mut seq = MpSequence::symbolic();
        for k in 0..8 {
            let mk = seq.get(k).clone();
            assert!(seq.get(0).commutes(&mk));
        }
        assert!(verify_all_pairs_commutation(6, &BiPeriodicParams::symbolic()).passed());
    }

    #[test]
    fn recurrence_invariant_holds() {
        let mut seq = MpSequence::symbolic();
        let mut report = Report::new("rec", 15);
        check_recurrence(&mut seq, 15, &mut report);
        assert!(report.passed());
        assert_eq!(report.checks, 13);
    }

    #[test]
    fn b_matrix_and_closed_powers() {
        let params = BiPeriodicParams::symbolic();
        let b = b_matrix(&params);
        let a = BivariatePoly::a();
        assert_eq!(b.to_string(), "[1, a, 1]\n[0, 1, 0]\n[0, 0, 1]");
        assert_eq!(b_power_closed(0, &a), Mat3::identity());
        assert_eq!(b_power_closed(-1, &a).to_string(), "[1, -a, -1]\n[0, 1, 0]\n[0, 0, 1]");
        assert_eq!(b_power_closed(7, &a), b.pow(7));
        assert_eq!(b_power_closed(2, &a).matmul(&b_power_closed(3, &a)), b_power_closed(5, &a));
    }

    #[test]
    fn b_char_poly_is_triple_one() {
        let b = b_matrix(&BiPeriodicParams::symbolic());
        assert_eq!(b.char_poly().to_string(), "λ^3 - 3*λ^2 + 3*λ - 1");
    }

    #[test]
    fn group_laws_small() {
        assert!(group_check(6, &BivariatePoly::a()).passed());
        assert!(group_check(6, &int_rational(5)).passed());
    }

    #[test]
    fn power_identities() {
        let mut report = Report::new("2.6", 4);
        check_power_identities(&mut report);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn q_growth() {
        let mut report = Report::new("qn", 60);
        check_q_growth(60, &mut report);
        assert!(report.passed());
    }
}
