use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// `a^deg_a · b^deg_b`, ordered graded-lexicographically (total degree
/// first, then the power of `a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub deg_a: u32,
    pub deg_b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg_a: 0, deg_b: 0 };

    pub fn new(deg_a: u32, deg_b: u32) -> Self {
        Self { deg_a, deg_b }
    }

    pub fn total_degree(&self) -> u32 {
        self.deg_a + self.deg_b
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.deg_a + other.deg_a, self.deg_b + other.deg_b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.deg_a.cmp(&other.deg_a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the symbols `a`, `b` with integer coefficients.
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivariatePoly {
    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// The symbol `a`.
    pub fn a() -> Self {
        Self::monomial(BigInt::one(), Monomial::new(1, 0))
    }

    /// The symbol `b`.
    pub fn b() -> Self {
        Self::monomial(BigInt::one(), Monomial::new(0, 1))
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn degree_in_b(&self) -> u32 {
        self.terms.keys().map(|m| m.deg_b).max().unwrap_or(0)
    }

    pub fn is_b_free(&self) -> bool {
        self.degree_in_b() == 0
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Substitutes `a := a0`, `b := b0`.
    pub fn eval(&self, a0: &Rational, b0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += BigRational::from_integer(c.clone())
                * num_traits::pow(a0.clone(), m.deg_a as usize)
                * num_traits::pow(b0.clone(), m.deg_b as usize);
        }
        acc
    }
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Zero for BivariatePoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivariatePoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (sym, deg) in [("a", m.deg_a), ("b", m.deg_b)] {
        match deg {
            0 => {}
            1 => parts.push(sym.to_string()),
            d => parts.push(format!("{sym}^{d}")),
        }
    }
    parts.join("*")
}

/// Canonical form, e.g. `a^3 + 1`, `a*b + a`, `-2*a^2*b + b - 1`.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", render_monomial(m))?;
            } else {
                write!(f, "{magnitude}*{}", render_monomial(m))?;
            }
        }
        Ok(())
    }
}
