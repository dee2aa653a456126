//! Real-root isolation for rational cubics (Sturm sequences plus exact
//! bisection) and exact roots in ℚ(√5).

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact_arith::{f64_to_rational, rational_to_f64, render_rational, QuadraticSurd, Rational};
use crate::matrix3::CubicPoly;

/// Isolating interval for one real root.
///
/// Either `lo == hi` and that point is an exact root, or `f(lo)` and
/// `f(hi)` are nonzero and bracket exactly one distinct root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    /// Midpoint sharpened by one guarded Newton step.
    pub refined: f64,
    pub tol: f64,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_surd(&self, x: &QuadraticSurd) -> bool {
        let lo = QuadraticSurd::from_rational(self.lo.clone());
        let hi = QuadraticSurd::from_rational(self.hi.clone());
        &lo <= x && x <= &hi
    }

    pub fn to_json(&self) -> IntervalJson {
        IntervalJson {
            lo: render_rational(&self.lo),
            hi: render_rational(&self.hi),
            lo_approx: rational_to_f64(&self.lo),
            hi_approx: rational_to_f64(&self.hi),
            refined: self.refined,
            tol: self.tol,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub lo_approx: f64,
    pub hi_approx: f64,
    pub refined: f64,
    pub tol: f64,
}

/// Dense polynomial over ℚ, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct DensePoly(Vec<Rational>);

impl DensePoly {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    fn from_cubic(p: &CubicPoly<Rational>) -> Self {
        Self::new(vec![p.c0.clone(), p.c1.clone(), p.c2.clone(), p.c3.clone()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn rem(&self, divisor: &Self) -> Self {
        let mut r = self.0.clone();
        let d = &divisor.0;
        let lead = d.last().expect("nonzero divisor");
        while r.len() >= d.len() {
            let shift = r.len() - d.len();
            let factor = r.last().unwrap() / lead;
            for (k, dc) in d.iter().enumerate() {
                r[shift + k] -= &factor * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain `f, f', −rem(f, f'), …`.
struct SturmChain(Vec<DensePoly>);

impl SturmChain {
    fn new(f: DensePoly) -> Self {
        let mut chain = vec![f.clone()];
        let mut prev = f.clone();
        let mut cur = f.derivative();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let next = prev.rem(&cur).neg();
            prev = cur;
            cur = next;
        }
        Self(chain)
    }

    fn sign_changes(&self, x: &Rational) -> usize {
        let signs: Vec<i8> = self.0.iter().map(|p| sign_of(&p.eval(x))).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in the open interval `(lo, hi)`; neither endpoint may
    /// be a root.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes(lo) - self.sign_changes(hi)
    }
}

/// Cauchy bound: every root lies strictly inside `(−B, B)`.
fn cauchy_bound(f: &DensePoly) -> Rational {
    let lead = f.0.last().unwrap().abs();
    let max = f.0[..f.degree()].iter().map(|c| c.abs() / &lead).max().unwrap_or_default();
    max + Rational::one()
}

/// A splitting point strictly inside `(lo, hi)` that is not a root of `f`.
fn split_point(f: &DensePoly, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    for (p, q) in [(1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7)] {
        let mid = lo + &width * BigRational::new(BigInt::from(p), BigInt::from(q));
        if !f.eval(&mid).is_zero() {
            return mid;
        }
    }
    unreachable!("a nonzero polynomial of degree <= 3 has at most 3 roots")
}

fn tol_rational(tol: f64) -> Rational {
    assert!(tol.is_finite() && tol > 0.0, "tolerance must be positive");
    f64_to_rational(tol).expect("finite tolerance")
}

/// All distinct real roots of a nonzero rational cubic, ascending, each
/// isolated to width `<= tol`.
pub fn real_root_intervals(poly: &CubicPoly<Rational>, tol: f64) -> Vec<RootInterval> {
    let f = DensePoly::from_cubic(poly);
    assert!(!f.is_zero(), "zero polynomial has no isolated roots");
    if f.degree() == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(f.clone());
    let bound = cauchy_bound(&f);
    let tol_q = tol_rational(tol);

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => out.push(refine_by_count(&f, &chain, lo, hi, &tol_q, tol)),
            _ => {
                let mid = split_point(&f, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

fn refine_by_count(
    f: &DensePoly,
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    tol_q: &Rational,
    tol: f64,
) -> RootInterval {
    let two = Rational::from_integer(BigInt::from(2));
    while &(&hi - &lo) > tol_q {
        let mid = (&lo + &hi) / &two;
        if f.eval(&mid).is_zero() {
            return RootInterval {
                refined: rational_to_f64(&mid),
                lo: mid.clone(),
                hi: mid,
                tol,
            };
        }
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    finish_interval(f, lo, hi, tol)
}

/// Sign bisection of `(lo, hi)` where `f(lo)` and `f(hi)` have opposite
/// nonzero signs.
pub(crate) fn bisect_sign_change(poly: &CubicPoly<Rational>, lo: Rational, hi: Rational, tol: f64) -> RootInterval {
    let f = DensePoly::from_cubic(poly);
    let tol_q = tol_rational(tol);
    let two = Rational::from_integer(BigInt::from(2));
    let (mut lo, mut hi) = (lo, hi);
    let lo_sign = sign_of(&f.eval(&lo));
    debug_assert!(lo_sign != 0 && lo_sign == -sign_of(&f.eval(&hi)));
    while (&hi - &lo) > tol_q {
        let mid = (&lo + &hi) / &two;
        let s = sign_of(&f.eval(&mid));
        if s == 0 {
            return RootInterval {
                refined: rational_to_f64(&mid),
                lo: mid.clone(),
                hi: mid,
                tol,
            };
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    finish_interval(&f, lo, hi, tol)
}

/// Midpoint plus one Newton step, kept only if it stays in the bracket and
/// does not increase `|f|`.
fn finish_interval(f: &DensePoly, lo: Rational, hi: Rational, tol: f64) -> RootInterval {
    let coeffs: Vec<f64> = f.0.iter().map(rational_to_f64).collect();
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let deriv = |x: f64| {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (k, c)| acc * x + c * k as f64)
    };
    let (lo_f, hi_f) = (rational_to_f64(&lo), rational_to_f64(&hi));
    let x0 = rational_to_f64(&((&lo + &hi) / Rational::from_integer(BigInt::from(2))));
    let d = deriv(x0);
    let mut refined = x0;
    if d != 0.0 && d.is_finite() {
        let x1 = x0 - eval(x0) / d;
        if x1 >= lo_f && x1 <= hi_f && eval(x1).abs() <= eval(x0).abs() {
            refined = x1;
        }
    }
    RootInterval { lo, hi, refined, tol }
}

/// Rational roots of `f` by the rational-root test on the cleared integer
/// polynomial. Gives up (returns what it has) for coefficients beyond
/// 10^24, where trial division becomes impractical.
fn rational_roots(f: &DensePoly) -> Vec<Rational> {
    let ints = clear_denominators(f);
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rational::zero());
    }
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let k0 = ints[lowest].abs();
    let kn = ints.last().unwrap().abs();
    let limit = BigInt::from(10u64).pow(24);
    if k0 > limit || kn > limit {
        return roots;
    }
    for p in divisors(&k0) {
        for q in divisors(&kn) {
            for s in [1, -1] {
                let r = BigRational::new(BigInt::from(s) * &p, q.clone());
                if f.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn clear_denominators(f: &DensePoly) -> Vec<BigInt> {
    let lcm = f.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    f.0.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let root = n.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Square root of a nonnegative rational, if it is rational.
fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// The three roots (with multiplicity, ascending) when all of them lie in
/// ℚ(√5); `None` otherwise.
pub fn surd_roots(poly: &CubicPoly<Rational>) -> Option<[QuadraticSurd; 3]> {
    let f = DensePoly::from_cubic(poly);
    if f.degree() != 3 {
        return None;
    }
    // Two conjugate irrational roots force the third to be rational.
    let r = rational_roots(&f).into_iter().next()?;
    // Deflate: f / (c3 (x − r)) = x² + s x + t
    let lead = &poly.c3;
    let s = &poly.c2 / lead + &r;
    let t = &poly.c1 / lead + &r * &s;
    let disc = &s * &s - Rational::from_integer(BigInt::from(4)) * &t;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sqrt_disc = match rational_sqrt(&disc) {
        Some(root) => QuadraticSurd::from_rational(root),
        None => {
            let scaled = &disc / Rational::from_integer(BigInt::from(5));
            QuadraticSurd::new(Rational::zero(), rational_sqrt(&scaled)?)
        }
    };
    let centre = QuadraticSurd::from_rational(-&s * &half);
    let offset = QuadraticSurd::from_rational(half.clone()) * sqrt_disc;
    let mut roots = [
        QuadraticSurd::from_rational(r),
        &centre - &offset,
        &centre + &offset,
    ];
    roots.sort();
    let check = poly.map(|c| QuadraticSurd::from_rational(c.clone()));
    roots.iter().all(|x| check.eval(x).is_zero()).then_some(roots)
}
