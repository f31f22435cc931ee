//! Truncated formal power series and the exponential generating functions of
//! the three families.
//!
//! A series of order `N` stores `c_0 .. c_N` and stands for
//! `sum c_i x^i + O(x^(N+1))`. Binary operations truncate to the smaller
//! order. The type is generic over the coefficient ring; the crate works with
//! [`Series`](crate::Series), i.e. exact rationals.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, rat_from_count, rat_from_u64, rat_to_count};
use crate::triangles::{Kind, Params};
use crate::{Count, Rat, Series};

/// Truncation order used when the caller does not choose one.
pub const DEFAULT_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T> PowerSeries<T>
where
    T: Clone + Num + FromPrimitive,
{
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `coef * x^power`, or zero if `power > order`.
    pub fn monomial(coef: T, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coef;
        }
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(coeffs: Vec<T>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; zero beyond the order is *not* implied, callers
    /// must stay within [`order`](Self::order).
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| self.coeffs[i].clone() - other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs: out }
    }

    /// `self^e` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        let order = self.order();
        let coeffs = (1..=order)
            .map(|i| self.coeffs[i].clone() * small::<T>(i))
            .collect();
        // the top coefficient is unknown after differentiation
        Self::from_coeffs(coeffs, order.saturating_sub(1))
    }

    /// `exp(self)` for a series with zero constant term.
    ///
    /// Uses `b' = b a'`, i.e. `n b_n = sum_{i=1..n} i a_i b_{n-i}` with `b_0 = 1`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp needs a zero constant term"));
        }
        let order = self.order();
        let mut b = vec![T::zero(); order + 1];
        b[0] = T::one();
        for n in 1..=order {
            let mut acc = T::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = acc + small::<T>(i) * self.coeffs[i].clone() * b[n - i].clone();
            }
            b[n] = acc / small::<T>(n);
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `1 + x + x^2 + ...`
    pub fn geometric(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::one(); order + 1],
        }
    }

    /// `-ln(1 - x) = x + x^2/2 + x^3/3 + ...`
    pub fn log_inv_one_minus_x(order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = T::one() / small::<T>(i);
        }
        PowerSeries { coeffs }
    }

    /// `exp(x)`
    pub fn exp_x(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = T::one();
        for i in 0..=order {
            if i > 0 {
                fact = fact * small::<T>(i);
            }
            coeffs.push(T::one() / fact.clone());
        }
        PowerSeries { coeffs }
    }

    /// Drops the coefficients of `x^0 .. x^(m-1)`.
    pub fn without_head(&self, m: usize) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().take(m) {
            *c = T::zero();
        }
        out
    }
}

fn small<T: FromPrimitive>(v: usize) -> T {
    T::from_usize(v).expect("coefficient type too narrow")
}

impl<T: Clone + Num + FromPrimitive> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::add(self, rhs)
    }
}

impl<T: Clone + Num + FromPrimitive> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::sub(self, rhs)
    }
}

impl<T: Clone + Num + FromPrimitive> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::mul(self, rhs)
    }
}

fn rat(v: u64) -> Rat {
    rat_from_u64(v)
}

fn inv_factorial(k: u32) -> Rat {
    Rat::new(BigInt::from(1), BigInt::from(factorial(k as u64)))
}

/// `x^s / (1 - x)`: one ordered list of at least `s` elements.
fn list_block(s: u32, order: usize) -> Series {
    Series::geometric(order).without_head(s as usize)
}

/// `x^(s-1) (s - (s-1) x) / (1 - x)^2`: the list holding one distinguished
/// element together with at least `s - 1` others.
fn distinguished_list_block(s: u32, order: usize) -> Series {
    let lead = Series::monomial(rat(s as u64), s as usize - 1, order).sub(&Series::monomial(
        rat(s as u64 - 1),
        s as usize,
        order,
    ));
    lead.mul(&Series::geometric(order).pow(2))
}

/// `sum_{i>=s} x^i / i`: one cycle of at least `s` elements.
fn cycle_block(s: u32, order: usize) -> Series {
    Series::log_inv_one_minus_x(order).without_head(s as usize)
}

/// `x^(s-1) / (1 - x)`: the cycle through a distinguished element.
fn distinguished_cycle_block(s: u32, order: usize) -> Series {
    Series::geometric(order).without_head(s as usize - 1)
}

/// `exp(x) - sum_{i<m} x^i/i!`: one block of at least `m` elements.
fn set_block(m: u32, order: usize) -> Series {
    Series::exp_x(order).without_head(m as usize)
}

/// The single-part series `A` and distinguished-part series `B` of a family,
/// so that the column generating function is `A^k B^r / k!`.
fn blocks(kind: Kind, s: u32, order: usize) -> (Series, Series) {
    match kind {
        Kind::FirstKind => (cycle_block(s, order), distinguished_cycle_block(s, order)),
        Kind::SecondKind => (set_block(s, order), set_block(s - 1, order)),
        Kind::Lah => (list_block(s, order), distinguished_list_block(s, order)),
    }
}

/// Column generating function `sum_n T[n+r, k+r]_r x^n / n!`.
///
/// `k` here is the shifted column index: the series enumerates the column
/// `k + r` of the `r` triangle, starting at row `r`.
pub fn egf_column(p: &Params, k: u32, order: usize) -> Series {
    let (single, distinguished) = blocks(p.kind(), p.s(), order);
    single
        .pow(k)
        .mul(&distinguished.pow(p.r()))
        .scale(&inv_factorial(k))
}

/// Closed form of `sum_k y^k sum_n T[n+r, k+r]_r x^n / n!` at a fixed
/// scalar `y`: `exp(y A) B^r`.
pub fn double_egf(p: &Params, y: &Rat, order: usize) -> Result<Series> {
    let (single, distinguished) = blocks(p.kind(), p.s(), order);
    Ok(single.scale(y).exp()?.mul(&distinguished.pow(p.r())))
}

/// `n! c_n`, which must be a nonnegative integer.
pub fn coefficient_count(series: &Series, n: usize) -> Result<Count> {
    if n > series.order() {
        return Err(Error::domain(format!(
            "coefficient {n} requested from a series of order {}",
            series.order()
        )));
    }
    let scaled = series.coeff(n) * rat_from_count(&factorial(n as u64));
    rat_to_count(&scaled)
}

/// Reads a sequence value through its generating function, choosing the
/// column and truncation order from the cell.
pub fn value_via_egf(p: &Params, n: u32, k: u32, max_order: usize) -> Result<Count> {
    if k < p.r() || n < p.r() {
        return Ok(Count::zero());
    }
    let shifted_n = (n - p.r()) as usize;
    if shifted_n > max_order {
        return Err(Error::domain(format!(
            "row {n} needs truncation order {shifted_n}, above the limit {max_order}"
        )));
    }
    let series = egf_column(p, k - p.r(), shifted_n);
    coefficient_count(&series, shifted_n)
}
