//! Exact integer and rational primitives shared by every other module.
//!
//! Counts are unsigned. Callers that need to compare two expressions evaluate
//! both sides and compare, they never subtract counts that might go negative.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Count, Rat};

/// Number of factorials precomputed by [`FactorialTable::default`].
pub const DEFAULT_FACTORIAL_CAP: usize = 64;

/// Precomputed `0!, 1!, ..., cap!`; larger arguments are extended on the fly.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    values: Vec<Count>,
}

impl FactorialTable {
    pub fn with_cap(cap: usize) -> Self {
        let mut values = Vec::with_capacity(cap + 1);
        values.push(Count::one());
        for i in 1..=cap {
            let next = &values[i - 1] * Count::from(i);
            values.push(next);
        }
        FactorialTable { values }
    }

    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: u64) -> Count {
        let cap = self.cap() as u64;
        if n <= cap {
            return self.values[n as usize].clone();
        }
        let mut acc = self.values[cap as usize].clone();
        for i in cap + 1..=n {
            acc *= Count::from(i);
        }
        acc
    }
}

impl Default for FactorialTable {
    fn default() -> Self {
        FactorialTable::with_cap(DEFAULT_FACTORIAL_CAP)
    }
}

fn factorials() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(FactorialTable::default)
}

/// `n!`
pub fn factorial(n: u64) -> Count {
    factorials().get(n)
}

/// Binomial coefficient, total over all integers.
///
/// Returns 0 when `k < 0`, `n < 0` or `k > n`. Several recurrences rely on
/// this, e.g. the `C(n-r-1, s-2)` term must vanish when `s = 1`.
pub fn binomial(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = Count::one();
    for i in 0..k {
        acc *= Count::from(n - i);
        acc /= Count::from(i + 1);
    }
    acc
}

/// `n! / (parts[0]! ... parts[m-1]! (n - sum)!)`; the last part is implicit.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<Count> {
    let used: u64 = parts.iter().sum();
    if used > n {
        return Err(Error::domain(format!(
            "multinomial parts sum to {used}, more than n = {n}"
        )));
    }
    let mut acc = Count::one();
    let mut remaining = n as i64;
    for &p in parts {
        acc *= binomial(remaining, p as i64);
        remaining -= p as i64;
    }
    Ok(acc)
}

/// `n (n-1) ... (n-k+1)`, with value 1 for `k = 0`.
pub fn falling_factorial(n: u64, k: u64) -> Result<Count> {
    if k > n {
        return Err(Error::domain(format!(
            "falling factorial needs k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok((n - k + 1..=n).fold(Count::one(), |acc, i| acc * Count::from(i)))
}

/// Number of compositions of `total` into `parts` nonnegative parts.
///
/// This is `C(total + parts - 1, parts - 1)` for `parts >= 1`; zero parts admit
/// exactly one (empty) composition of 0 and none of anything else.
pub fn compositions_count(total: i64, parts: i64) -> Count {
    if total < 0 || parts < 0 {
        return Count::zero();
    }
    if parts == 0 {
        return if total == 0 {
            Count::one()
        } else {
            Count::zero()
        };
    }
    binomial(total + parts - 1, parts - 1)
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: u64, exp: u64) -> Count {
    Count::from(base).pow(exp)
}

/// `a - b`, signalling an error instead of wrapping below zero.
pub fn checked_sub(a: &Count, b: &Count) -> Result<Count> {
    if a < b {
        return Err(Error::Underflow(format!("{a} - {b}")));
    }
    Ok(a - b)
}

pub fn rat_from_count(c: &Count) -> Rat {
    Rat::from_integer(BigInt::from(c.clone()))
}

pub fn rat_from_u64(v: u64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `num / den` as an exact rational.
pub fn ratio(num: &Count, den: &Count) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::domain("division by zero"));
    }
    Ok(Rat::new(
        BigInt::from(num.clone()),
        BigInt::from(den.clone()),
    ))
}

/// Converts an exact rational to a count, failing unless it is a nonnegative
/// integer.
pub fn rat_to_count(q: &Rat) -> Result<Count> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    Ok(q.numer().magnitude().clone())
}

/// gcd of numerator and denominator; one for every reduced rational.
pub fn rat_gcd(q: &Rat) -> BigUint {
    q.numer().magnitude().gcd(q.denom().magnitude())
}
