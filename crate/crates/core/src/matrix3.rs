//! 3×3 matrices over an exact (or floating) commutative ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exact_arith::{Rational, Ring, Scalar};

/// Row-major 3×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3<R> {
    entries: [R; 9],
}

impl<R> Mat3<R> {
    pub fn from_rows(rows: [[R; 3]; 3]) -> Self {
        let [r0, r1, r2] = rows;
        let [a, b, c] = r0;
        let [d, e, f] = r1;
        let [g, h, i] = r2;
        Self {
            entries: [a, b, c, d, e, f, g, h, i],
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        Self {
            entries: std::array::from_fn(|k| f(k / 3, k % 3)),
        }
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[3 * row + col]
    }

    pub fn entries(&self) -> &[R; 9] {
        &self.entries
    }

    pub fn rows(&self) -> [&[R]; 3] {
        [
            &self.entries[0..3],
            &self.entries[3..6],
            &self.entries[6..9],
        ]
    }

    pub fn map<S>(&self, mut f: impl FnMut(&R) -> S) -> Mat3<S> {
        Mat3 {
            entries: std::array::from_fn(|k| f(&self.entries[k])),
        }
    }
}

impl<R: Ring> Mat3<R> {
    pub fn zero() -> Self {
        Self::from_fn(|_, _| R::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(d: [R; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { R::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..3).fold(R::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        })
    }

    pub fn pow(&self, n: u64) -> Self {
        self.pow_counted(n).0
    }

    /// Square-and-multiply, scanning exponent bits from the top. Returns the
    /// power and the number of 3×3 products performed
    /// (`⌊log₂ n⌋ + popcount(n) − 1` for `n ≥ 1`).
    pub fn pow_counted(&self, n: u64) -> (Self, u32) {
        if n == 0 {
            return (Self::identity(), 0);
        }
        let mut acc = self.clone();
        let mut products = 0;
        let top = 63 - n.leading_zeros();
        for bit in (0..top).rev() {
            acc = acc.matmul(&acc);
            products += 1;
            if (n >> bit) & 1 == 1 {
                acc = acc.matmul(self);
                products += 1;
            }
        }
        (acc, products)
    }

    pub fn trace(&self) -> R {
        self.get(0, 0).clone() + self.get(1, 1).clone() + self.get(2, 2).clone()
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> R {
        let e = |i, j| self.get(i, j).clone();
        let minor = |r0: usize, c0: usize, r1: usize, c1: usize| {
            e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0)
        };
        e(0, 0) * minor(1, 1, 2, 2) - e(0, 1) * minor(1, 0, 2, 2) + e(0, 2) * minor(1, 0, 2, 1)
    }

    /// `det(λI − A)`, expanded along the first row with entries treated as
    /// polynomials in λ.
    pub fn char_poly(&self) -> CubicPoly<R> {
        let entry = |i: usize, j: usize| -> LambdaPoly<R> {
            let c = -self.get(i, j).clone();
            if i == j {
                LambdaPoly::from_coeffs(vec![c, R::one()])
            } else {
                LambdaPoly::from_coeffs(vec![c])
            }
        };
        let minor = |r0: usize, c0: usize, r1: usize, c1: usize| {
            entry(r0, c0).matmul(&entry(r1, c1)).sub(&entry(r0, c1).matmul(&entry(r1, c0)))
        };
        let expanded = entry(0, 0)
            .matmul(&minor(1, 1, 2, 2))
            .sub(&entry(0, 1).matmul(&minor(1, 0, 2, 2)))
            .add(&entry(0, 2).matmul(&minor(1, 0, 2, 1)));
        let c = |k: usize| expanded.0.get(k).cloned().unwrap_or_else(R::zero);
        CubicPoly::new(c(3), c(2), c(1), c(0))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other) - other.matmul(self)
    }

    /// Whether `A·B − B·A` is exactly the zero matrix.
    pub fn commutes(&self, other: &Self) -> bool {
        self.commutator(other).is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

impl<R: Ring> Add for Mat3<R> {
    type Output = Mat3<R>;
    fn add(self, rhs: Self) -> Self {
        Mat3::from_fn(|i, j| self.get(i, j).clone() + rhs.get(i, j).clone())
    }
}

impl<R: Ring> Sub for Mat3<R> {
    type Output = Mat3<R>;
    fn sub(self, rhs: Self) -> Self {
        Mat3::from_fn(|i, j| self.get(i, j).clone() - rhs.get(i, j).clone())
    }
}

impl<R: Ring> Neg for Mat3<R> {
    type Output = Mat3<R>;
    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<R: Ring> Mul for &Mat3<R> {
    type Output = Mat3<R>;
    fn mul(self, rhs: Self) -> Mat3<R> {
        Mat3::matmul(self, rhs)
    }
}

impl<R: Ring> Mul for Mat3<R> {
    type Output = Mat3<R>;
    fn mul(self, rhs: Self) -> Mat3<R> {
        Mat3::matmul(&self, &rhs)
    }
}

impl Mat3<Rational> {
    /// Exact inverse via the adjugate; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        Some(self.adjugate().map(|x| x / &det))
    }
}

impl Mat3<f64> {
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(self.adjugate().map(|x| x / det))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl<R: Ring> Mat3<R> {
    /// Transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Self {
        let e = |i: usize, j: usize| self.get(i, j).clone();
        let cofactor = |i: usize, j: usize| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let m = e(rows[0], cols[0]) * e(rows[1], cols[1]) - e(rows[0], cols[1]) * e(rows[1], cols[0]);
            if (i + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        };
        Self::from_fn(|i, j| cofactor(j, i))
    }
}

/// One bracketed row per line, entries in canonical scalar form.
impl<R: Scalar> fmt::Display for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows().iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::render).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Dense polynomial in λ, lowest degree first. Only used for the cofactor
/// expansion of `det(λI − A)`.
struct LambdaPoly<R>(Vec<R>);

impl<R: Ring> LambdaPoly<R> {
    fn from_coeffs(c: Vec<R>) -> Self {
        Self(c)
    }

    fn combine(&self, other: &Self, f: impl Fn(R, R) -> R) -> Self {
        let len = self.0.len().max(other.0.len());
        let at = |p: &Self, k: usize| p.0.get(k).cloned().unwrap_or_else(R::zero);
        Self((0..len).map(|k| f(at(self, k), at(other, k))).collect())
    }

    fn add(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x + y)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x - y)
    }

    fn matmul(&self, other: &Self) -> Self {
        let mut out = vec![R::zero(); self.0.len() + other.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Self(out)
    }
}

/// `c3·λ³ + c2·λ² + c1·λ + c0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicPoly<R> {
    pub c3: R,
    pub c2: R,
    pub c1: R,
    pub c0: R,
}

impl<R> CubicPoly<R> {
    pub fn new(c3: R, c2: R, c1: R, c0: R) -> Self {
        Self { c3, c2, c1, c0 }
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> CubicPoly<S> {
        CubicPoly::new(f(&self.c3), f(&self.c2), f(&self.c1), f(&self.c0))
    }
}

impl<R: Ring> CubicPoly<R> {
    /// Monic `(λ − x)(λ − y)(λ − z)`.
    pub fn from_roots(x: R, y: R, z: R) -> Self {
        let e1 = x.clone() + y.clone() + z.clone();
        let e2 = x.clone() * y.clone() + x.clone() * z.clone() + y.clone() * z.clone();
        let e3 = x * y * z;
        Self::new(R::one(), -e1, e2, -e3)
    }

    pub fn eval(&self, x: &R) -> R {
        ((self.c3.clone() * x.clone() + self.c2.clone()) * x.clone() + self.c1.clone()) * x.clone()
            + self.c0.clone()
    }

    /// Coefficients of the derivative `3c3·λ² + 2c2·λ + c1`, highest first.
    pub fn derivative(&self) -> [R; 3] {
        let two = R::one() + R::one();
        let three = two.clone() + R::one();
        [three * self.c3.clone(), two * self.c2.clone(), self.c1.clone()]
    }

    /// `18·c3c2c1c0 − 4·c2³c0 + c2²c1² − 4·c3c1³ − 27·c3²c0²`.
    pub fn discriminant(&self) -> R {
        let k = |n: i64| -> R {
            let mut acc = R::zero();
            for _ in 0..n.abs() {
                acc = acc + R::one();
            }
            if n < 0 {
                -acc
            } else {
                acc
            }
        };
        let (a, b, c, d) = (self.c3.clone(), self.c2.clone(), self.c1.clone(), self.c0.clone());
        k(18) * a.clone() * b.clone() * c.clone() * d.clone()
            - k(4) * b.clone() * b.clone() * b.clone() * d.clone()
            + b.clone() * b.clone() * c.clone() * c.clone()
            - k(4) * a.clone() * c.clone() * c.clone() * c
            - k(27) * a.clone() * a * d.clone() * d
    }
}

impl CubicPoly<Rational> {
    pub fn eval_f64(&self, x: f64) -> f64 {
        let c = self.map(crate::exact_arith::rational_to_f64);
        ((c.c3 * x + c.c2) * x + c.c1) * x + c.c0
    }
}

/// `λ^3 - a*λ - 1`, `λ^3 - 3*λ^2 + 3*λ - 1`.
impl<R: Scalar> fmt::Display for CubicPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = [(&self.c3, 3), (&self.c2, 2), (&self.c1, 1), (&self.c0, 0)];
        let mut first = true;
        for (c, deg) in coeffs {
            if c.is_zero() {
                continue;
            }
            let power = match deg {
                0 => String::new(),
                1 => "λ".to_string(),
                d => format!("λ^{d}"),
            };
            let text = c.render();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            let body = if body.contains(' ') {
                format!("({body})")
            } else {
                body
            };
            let term = if deg == 0 {
                body
            } else if body == "1" {
                power
            } else {
                format!("{body}*{power}")
            };
            if first {
                write!(f, "{}{term}", if negative { "-" } else { "" })?;
                first = false;
            } else {
                write!(f, " {} {term}", if negative { '-' } else { '+' })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
