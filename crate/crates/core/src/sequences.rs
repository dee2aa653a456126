//! Padovan, Fibonacci, Lucas and bi-periodic Padovan numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{BivariatePoly, Integer, QuadraticSurd, Rational, Ring};

/// Initial values of the Padovan recurrence `p(n) = p(n-2) + p(n-3)`.
///
/// The `Q^n` entry formula in [`crate::padovan_matrices`] holds for
/// `Classic`; nothing in the matrix formula itself pins the convention, it
/// was settled by checking small powers of `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PadovanConvention {
    /// p0 = p1 = p2 = 1
    #[default]
    Classic,
    /// p0 = 1, p1 = 0, p2 = 1
    Shifted,
}

impl PadovanConvention {
    fn seeds(self) -> [i64; 3] {
        match self {
            PadovanConvention::Classic => [1, 1, 1],
            PadovanConvention::Shifted => [1, 0, 1],
        }
    }
}

impl FromStr for PadovanConvention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "classic" => Ok(Self::Classic),
            "shifted" => Ok(Self::Shifted),
            other => Err(format!("unknown Padovan convention `{other}`")),
        }
    }
}

impl fmt::Display for PadovanConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Classic => "classic",
            Self::Shifted => "shifted",
        })
    }
}

/// `p(n)` for any integer `n`. Negative indices run the recurrence
/// backwards: `p(k-3) = p(k) - p(k-2)`.
pub fn padovan(n: i64, conv: PadovanConvention) -> Integer {
    let [s0, s1, s2] = conv.seeds().map(BigInt::from);
    if n >= 0 {
        if n < 3 {
            return [s0, s1, s2][n as usize].clone();
        }
        let (mut x, mut y, mut z) = (s0, s1, s2);
        for _ in 3..=n {
            let next = &y + &x;
            x = y;
            y = z;
            z = next;
        }
        z
    } else {
        // window (p(k), p(k+1), p(k+2)) starting at k = 0
        let (mut x, mut y, mut z) = (s0, s1, s2);
        for _ in 0..(-n) {
            let prev = &z - &x;
            z = y;
            y = x;
            x = prev;
        }
        x
    }
}

/// `p(0), …, p(n)`.
pub fn padovan_terms(n: u64, conv: PadovanConvention) -> Vec<Integer> {
    let mut out: Vec<Integer> = conv.seeds().iter().map(|&s| BigInt::from(s)).collect();
    for k in 3..=n as usize {
        let next = &out[k - 2] + &out[k - 3];
        out.push(next);
    }
    out.truncate(n as usize + 1);
    out
}

fn two_term(n: u64, first: i64, second: i64) -> Integer {
    let (mut x, mut y) = (BigInt::from(first), BigInt::from(second));
    for _ in 0..n {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    x
}

pub fn fibonacci(n: u64) -> Integer {
    two_term(n, 0, 1)
}

pub fn lucas(n: u64) -> Integer {
    two_term(n, 2, 1)
}

pub fn fibonacci_terms(n: u64) -> Vec<Integer> {
    (0..=n).scan((BigInt::zero(), BigInt::one()), |st, _| {
        let out = st.0.clone();
        let next = &st.0 + &st.1;
        st.0 = std::mem::replace(&mut st.1, next);
        Some(out)
    })
    .collect()
}

pub fn lucas_terms(n: u64) -> Vec<Integer> {
    (0..=n).scan((BigInt::from(2), BigInt::one()), |st, _| {
        let out = st.0.clone();
        let next = &st.0 + &st.1;
        st.0 = std::mem::replace(&mut st.1, next);
        Some(out)
    })
    .collect()
}

/// `L(n) = α^n + β^n` evaluated in ℚ(√5).
pub fn binet_lucas(n: u64) -> Result<Integer> {
    let sum = QuadraticSurd::alpha().pow(n) + QuadraticSurd::beta().pow(n);
    integer_part(sum, n)
}

/// `F(n) = (α^n − β^n)/(α − β)` evaluated in ℚ(√5).
pub fn binet_fibonacci(n: u64) -> Result<Integer> {
    let diff = QuadraticSurd::alpha().pow(n) - QuadraticSurd::beta().pow(n);
    let quotient = diff / (QuadraticSurd::alpha() - QuadraticSurd::beta());
    integer_part(quotient, n)
}

fn integer_part(x: QuadraticSurd, n: u64) -> Result<Integer> {
    if !x.is_rational() || !x.rat().is_integer() {
        return Err(Error::BinetCancellation(n));
    }
    Ok(x.rat().to_integer())
}

/// Coefficients `a` (even steps) and `b` (odd steps) of the bi-periodic
/// recurrence. Numeric parameters must be nonzero; the symbolic pair is the
/// generators of ℤ[a, b].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPeriodicParams<R> {
    a: R,
    b: R,
}

impl<R> BiPeriodicParams<R> {
    pub fn a(&self) -> &R {
        &self.a
    }

    pub fn b(&self) -> &R {
        &self.b
    }

    /// Coefficient used at step `n`: `a` for even `n`, `b` for odd `n`.
    pub fn coefficient(&self, n: u64) -> &R {
        if n.is_multiple_of(2) {
            &self.a
        } else {
            &self.b
        }
    }
}

impl BiPeriodicParams<Rational> {
    pub fn numeric(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ParamZero("a"));
        }
        if b.is_zero() {
            return Err(Error::ParamZero("b"));
        }
        Ok(Self { a, b })
    }
}

impl BiPeriodicParams<BivariatePoly> {
    pub fn symbolic() -> Self {
        Self {
            a: BivariatePoly::a(),
            b: BivariatePoly::b(),
        }
    }
}

/// `P(0), …, P(n)` with `P0 = 1, P1 = 0, P2 = a` and
/// `P(n) = c(n)·P(n-2) + P(n-3)`, `c(n)` alternating `a`/`b` by parity.
pub fn biperiodic_terms<R: Ring>(n: u64, params: &BiPeriodicParams<R>) -> Vec<R> {
    let mut out = vec![R::one(), R::zero(), params.a.clone()];
    for k in 3..=n {
        let k_us = k as usize;
        let next = params.coefficient(k).clone() * out[k_us - 2].clone() + out[k_us - 3].clone();
        out.push(next);
    }
    out.truncate(n as usize + 1);
    out
}

pub fn biperiodic_padovan<R: Ring>(n: u64, params: &BiPeriodicParams<R>) -> R {
    biperiodic_terms(n, params).pop().expect("at least one term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int_rational;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classic_padovan_values() {
        let got: Vec<_> = (0..=8).map(|n| padovan(n, PadovanConvention::Classic)).collect();
        assert_eq!(got, ints(&[1, 1, 1, 2, 2, 3, 4, 5, 7]));
        assert_eq!(padovan_terms(8, PadovanConvention::Classic), got);
        assert_eq!(padovan(10, PadovanConvention::Classic), BigInt::from(12));
    }

    #[test]
    fn classic_padovan_negative_indices() {
        let got: Vec<_> = (1..=5).map(|k| padovan(-k, PadovanConvention::Classic)).collect();
        // p(-5) = p(-2) - p(-4) = 1
        assert_eq!(got, ints(&[0, 1, 0, 0, 1]));
    }

    #[test]
    fn shifted_padovan_values() {
        let got: Vec<_> = (0..=6).map(|n| padovan(n, PadovanConvention::Shifted)).collect();
        assert_eq!(got, ints(&[1, 0, 1, 1, 1, 2, 2]));
    }

    #[test]
    fn recurrence_over_negative_and_positive_range() {
        for conv in [PadovanConvention::Classic, PadovanConvention::Shifted] {
            for n in -10..=60 {
                assert_eq!(
                    padovan(n, conv),
                    padovan(n - 2, conv) + padovan(n - 3, conv),
                    "{conv} n={n}"
                );
            }
        }
    }

    #[test]
    fn fibonacci_lucas_seeds() {
        assert_eq!(fibonacci(0), BigInt::from(0));
        assert_eq!(fibonacci(1), BigInt::from(1));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(1), BigInt::from(1));
        assert_eq!(lucas(10), BigInt::from(123));
        assert_eq!(lucas_terms(5), ints(&[2, 1, 3, 4, 7, 11]));
        assert_eq!(fibonacci_terms(6), ints(&[0, 1, 1, 2, 3, 5, 8]));
    }

    #[test]
    fn binet_small() {
        assert_eq!(binet_lucas(0).unwrap(), BigInt::from(2));
        assert_eq!(binet_fibonacci(0).unwrap(), BigInt::from(0));
        for n in 0..40 {
            assert_eq!(binet_lucas(n).unwrap(), lucas(n));
            assert_eq!(binet_fibonacci(n).unwrap(), fibonacci(n));
        }
    }

    #[test]
    fn biperiodic_symbolic_terms() {
        let terms = biperiodic_terms(6, &BiPeriodicParams::symbolic());
        let rendered: Vec<String> = terms.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["1", "0", "a", "1", "a^2", "a + b", "a^3 + 1"]);
    }

    #[test]
    fn biperiodic_numeric_matches_symbolic() {
        let params = BiPeriodicParams::numeric(int_rational(2), int_rational(7)).unwrap();
        assert_eq!(biperiodic_padovan(6, &params), int_rational(9));
        let sym = biperiodic_padovan(6, &BiPeriodicParams::symbolic());
        assert_eq!(sym.eval(&int_rational(2), &int_rational(7)), int_rational(9));
    }

    #[test]
    fn biperiodic_rejects_zero_params() {
        assert_eq!(
            BiPeriodicParams::numeric(int_rational(0), int_rational(1)),
            Err(Error::ParamZero("a"))
        );
        assert_eq!(
            BiPeriodicParams::numeric(int_rational(1), int_rational(0)),
            Err(Error::ParamZero("b"))
        );
    }

    #[test]
    fn biperiodic_unit_params_give_shifted_padovan() {
        let params = BiPeriodicParams::numeric(int_rational(1), int_rational(1)).unwrap();
        let terms = biperiodic_terms(40, &params);
        for (n, t) in terms.iter().enumerate() {
            let expected = padovan(n as i64, PadovanConvention::Shifted);
            assert_eq!(*t, Rational::from_integer(expected), "n={n}");
        }
    }
}
