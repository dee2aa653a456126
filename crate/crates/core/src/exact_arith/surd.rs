use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rational, rational_to_f64, Rational};

/// An element `rat + coef·√5` of ℚ(√5).
///
/// Since √5 is irrational the pair `(rat, coef)` is unique, so the derived
/// equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    rat: Rational,
    coef: Rational,
}

impl QuadraticSurd {
    pub fn new(rat: Rational, coef: Rational) -> Self {
        Self { rat, coef }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Self {
            rat,
            coef: Rational::zero(),
        }
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn alpha() -> Self {
        Self::new(rational(1, 2), rational(1, 2))
    }

    /// Its conjugate (1 − √5)/2.
    pub fn beta() -> Self {
        Self::new(rational(1, 2), rational(-1, 2))
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn is_rational(&self) -> bool {
        self.coef.is_zero()
    }

    /// Galois conjugate: √5 ↦ −√5.
    pub fn conjugate(&self) -> Self {
        Self::new(self.rat.clone(), -self.coef.clone())
    }

    /// Field norm `rat² − 5·coef²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(BigInt::from(5)) * &self.coef * &self.coef
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = self.norm();
        let conj = self.conjugate();
        Some(Self::new(conj.rat / &norm, conj.coef / norm))
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// −1, 0 or 1, decided exactly.
    pub fn signum(&self) -> i8 {
        let s_rat = sign(&self.rat);
        let s_coef = sign(&self.coef);
        if s_rat == s_coef || s_coef == 0 {
            return s_rat;
        }
        if s_rat == 0 {
            return s_coef;
        }
        // Opposite signs: compare rat² with 5·coef².
        let lhs = &self.rat * &self.rat;
        let rhs = Rational::from_integer(BigInt::from(5)) * &self.coef * &self.coef;
        match lhs.cmp(&rhs) {
            Ordering::Greater => s_rat,
            Ordering::Less => s_coef,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rat) + rational_to_f64(&self.coef) * 5f64.sqrt()
    }
}

fn sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        QuadraticSurd::new(&self.rat + &rhs.rat, &self.coef + &rhs.coef)
    }
}

impl<'a> Sub<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        QuadraticSurd::new(&self.rat - &rhs.rat, &self.coef - &rhs.coef)
    }
}

impl<'a> Mul<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let five = Rational::from_integer(BigInt::from(5));
        QuadraticSurd::new(
            &self.rat * &rhs.rat + five * &self.coef * &rhs.coef,
            &self.rat * &rhs.coef + &self.coef * &rhs.rat,
        )
    }
}

impl Add for QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for QuadraticSurd {
    type Output = QuadraticSurd;

    /// Panics on division by zero, like the integer types do.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inv().expect("division by zero in ℚ(√5)");
        &self * &inv
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> Self {
        Self::new(-self.rat, -self.coef)
    }
}

impl Zero for QuadraticSurd {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }
}

impl One for QuadraticSurd {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

/// Renders over a common denominator: `-1`, `(1 + sqrt(5))/2`,
/// `(3 - sqrt(5))/2`, `2*sqrt(5)`.
impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let denom = self.rat.denom().lcm(self.coef.denom());
        let p = self.rat.numer() * (&denom / self.rat.denom());
        let q = self.coef.numer() * (&denom / self.coef.denom());
        let surd = if q.abs().is_one() {
            "sqrt(5)".to_string()
        } else {
            format!("{}*sqrt(5)", q.abs())
        };
        let body = if p.is_zero() {
            if q.is_negative() {
                format!("-{surd}")
            } else {
                surd
            }
        } else {
            let op = if q.is_negative() { '-' } else { '+' };
            format!("{p} {op} {surd}")
        };
        if denom.is_one() {
            write!(f, "{body}")
        } else if p.is_zero() {
            write!(f, "{body}/{denom}")
        } else {
            write!(f, "({body})/{denom}")
        }
    }
}
