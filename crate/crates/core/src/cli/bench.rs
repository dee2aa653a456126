//! Three ways to compute the classic Padovan number `p(n)`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::exact_arith::{decimal_digits, Integer};
use crate::padovan_matrices::q_matrix;
use crate::sequences::{padovan, PadovanConvention};

/// Checksums are taken modulo the Mersenne prime `2^61 − 1`.
pub const CHECKSUM_MODULUS: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchMethod {
    /// The recurrence, one addition per step.
    Naive,
    /// `Q^n` by square-and-multiply.
    Matpow,
    /// `x^n mod (x³ − x − 1)`, from `Q³ = Q + I`.
    Cayley,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 3] = [BenchMethod::Naive, BenchMethod::Matpow, BenchMethod::Cayley];
}

impl FromStr for BenchMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "naive" => Ok(Self::Naive),
            "matpow" => Ok(Self::Matpow),
            "cayley" => Ok(Self::Cayley),
            other => Err(format!("unknown method `{other}` (expected naive, matpow or cayley)")),
        }
    }
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Naive => "naive",
            Self::Matpow => "matpow",
            Self::Cayley => "cayley",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchResult {
    pub method: BenchMethod,
    pub n: u64,
    pub elapsed_ms: u64,
    pub result_digits: usize,
    pub checksum: u64,
    /// Big-number products performed (matrix or polynomial), where counted.
    pub products: Option<u32>,
}

pub fn checksum(value: &Integer) -> u64 {
    let m = BigInt::from(CHECKSUM_MODULUS);
    let r = ((value % &m) + &m) % &m;
    r.to_u64().expect("reduced below 2^61")
}

/// `p(n)` together with the number of products the method used.
pub fn compute(method: BenchMethod, n: u64) -> (Integer, Option<u32>) {
    match method {
        BenchMethod::Naive => (padovan(n as i64, PadovanConvention::Classic), None),
        BenchMethod::Matpow => matpow(n),
        BenchMethod::Cayley => cayley(n),
    }
}

/// `p(n) = p(n−2) + p(n−3)`, the sum of the first and last entries of the
/// top row of `Q^n`.
fn matpow(n: u64) -> (Integer, Option<u32>) {
    if n == 0 {
        return (BigInt::from(1), Some(0));
    }
    let (qn, products) = q_matrix().pow_counted(n);
    (qn.get(0, 0) + qn.get(0, 2), Some(products))
}

/// Residue `c0 + c1·x + c2·x²` of `x^n` modulo `x³ − x − 1`; since the
/// shift on Padovan sequences satisfies the same relation,
/// `p(n) = c0·p(0) + c1·p(1) + c2·p(2) = c0 + c1 + c2`.
fn cayley(n: u64) -> (Integer, Option<u32>) {
    let mut products = 0u32;
    let mut acc: [Integer; 3] = [BigInt::from(1), BigInt::zero(), BigInt::zero()];
    let mut started = false;
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        if started {
            acc = mul_mod(&acc, &acc);
            products += 1;
        }
        if (n >> bit) & 1 == 1 {
            acc = shift_mod(&acc);
            started = true;
        }
    }
    let [c0, c1, c2] = acc;
    (c0 + c1 + c2, Some(products))
}

/// Product of two residues, reduced with `x³ = x + 1`, `x⁴ = x² + x`.
fn mul_mod(p: &[Integer; 3], q: &[Integer; 3]) -> [Integer; 3] {
    let mut full: [Integer; 5] = Default::default();
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            full[i + j] += pi * qj;
        }
    }
    let [d0, d1, d2, d3, d4] = full;
    [d0 + &d3, d1 + d3 + &d4, d2 + d4]
}

/// Multiplication by `x`.
fn shift_mod(p: &[Integer; 3]) -> [Integer; 3] {
    [p[2].clone(), &p[0] + &p[2], p[1].clone()]
}

/// Upper bound `2·⌈log₂ n⌉` on matrix products for square-and-multiply.
pub fn product_bound(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        2 * (u64::BITS - (n - 1).leading_zeros())
    }
}

pub fn run(method: BenchMethod, n: u64) -> BenchResult {
    let start = Instant::now();
    let (value, products) = compute(method, n);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    BenchResult {
        method,
        n,
        elapsed_ms,
        result_digits: decimal_digits(&value),
        checksum: checksum(&value),
        products,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_agree() {
        for method in BenchMethod::ALL {
            assert_eq!(compute(method, 10).0, BigInt::from(12), "{method}");
            assert_eq!(compute(method, 1).0, BigInt::from(1), "{method}");
            for n in 0..60 {
                assert_eq!(compute(method, n).0, padovan(n as i64, PadovanConvention::Classic), "{method} n={n}");
            }
        }
    }

    #[test]
    fn product_counts_are_logarithmic() {
        for n in [2u64, 3, 7, 8, 1000, 100_000, (1 << 20) - 1] {
            let (_, products) = compute(BenchMethod::Matpow, n);
            assert!(products.unwrap() <= product_bound(n), "n={n}");
        }
        assert_eq!(product_bound(1000), 20);
        assert_eq!(product_bound(1024), 20);
        assert_eq!(product_bound(1025), 22);
    }

    #[test]
    fn checksum_is_reduced() {
        assert_eq!(checksum(&BigInt::from(12)), 12);
        assert_eq!(checksum(&BigInt::from(CHECKSUM_MODULUS)), 0);
        assert_eq!(checksum(&BigInt::from(-1)), CHECKSUM_MODULUS - 1);
    }
}
