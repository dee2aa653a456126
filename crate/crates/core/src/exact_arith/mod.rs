//! Exact scalars: big integers, rationals, the field ℚ(√5) and the
//! polynomial ring ℤ[a, b].
//!
//! Integers and rationals are `num-bigint` / `num-rational` types. Those
//! normalise eagerly (positive denominator, coprime parts), so equality on
//! [`Rational`] is structural.

mod poly;
mod surd;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use poly::{BivariatePoly, Monomial};
pub use surd::QuadraticSurd;

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

/// Commutative ring with unit, as needed by the 3×3 matrix algebra.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A ring element that can be built from a machine integer and rendered
/// canonically.
pub trait Scalar: Ring + Display {
    fn from_i64(n: i64) -> Self;

    /// Canonical text form used by the CLI and golden tests.
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Integer {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for QuadraticSurd {
    fn from_i64(n: i64) -> Self {
        QuadraticSurd::from_rational(Rational::from_i64(n))
    }
}

impl Scalar for BivariatePoly {
    fn from_i64(n: i64) -> Self {
        BivariatePoly::constant(BigInt::from(n))
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int_rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer. Decimal points are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn render_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn rational_to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow.
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(value: f64) -> Option<Rational> {
    BigRational::from_float(value)
}

/// Number of decimal digits of `|n|` (zero has one digit).
pub fn decimal_digits(n: &Integer) -> usize {
    n.magnitude().to_str_radix(10).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_fraction_and_integer() {
        assert_eq!(parse_rational("5/2").unwrap(), rational(5, 2));
        assert_eq!(parse_rational("-3").unwrap(), int_rational(-3));
        assert_eq!(parse_rational("4/-6").unwrap(), rational(-2, 3));
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("2.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rational_normalises() {
        let r = rational(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(render_rational(&r), "-3/2");
        assert_eq!(render_rational(&int_rational(7)), "7");
    }

    #[test]
    fn digits() {
        assert_eq!(decimal_digits(&BigInt::from(0)), 1);
        assert_eq!(decimal_digits(&BigInt::from(-12345)), 5);
    }
}
