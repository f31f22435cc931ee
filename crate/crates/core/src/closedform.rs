//! Explicit formulas: sums over compositions and single binomial sums.
//!
//! Every function here is computed without touching the recurrence engine,
//! except the Lah relations that are themselves statements about sequence
//! values (rational recurrence, Vandermonde-type sum, vertical recurrence);
//! those read their inputs from a [`Triangles`] store.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, compositions_count, factorial, falling_factorial, multinomial, pow, rat_from_count,
    rat_from_u64, rat_to_count, ratio,
};
use crate::triangles::{Kind, Params};
use crate::{Cell, Count, Rat, Triangles};

/// Weak compositions of `total` into a fixed number of parts, each part at
/// least its own minimum, in lexicographic order.
#[derive(Debug, Clone)]
pub struct CompositionIter {
    mins: Vec<u64>,
    excess: Vec<u64>,
    done: bool,
}

impl CompositionIter {
    /// Compositions with the same floor `minimum` on every part.
    pub fn new(total: u64, parts: usize, minimum: u64) -> Self {
        Self::with_minimums(total, vec![minimum; parts])
    }

    pub fn with_minimums(total: u64, mins: Vec<u64>) -> Self {
        let floor: u64 = mins.iter().sum();
        let parts = mins.len();
        if total < floor || (parts == 0 && total != 0) {
            return CompositionIter {
                mins,
                excess: Vec::new(),
                done: true,
            };
        }
        let mut excess = vec![0; parts];
        if let Some(last) = excess.last_mut() {
            *last = total - floor;
        }
        CompositionIter {
            mins,
            excess,
            done: false,
        }
    }

    fn advance(&mut self) {
        let m = self.excess.len();
        match (1..m).rev().find(|&i| self.excess[i] > 0) {
            None => self.done = true,
            Some(t) => {
                let rest = self.excess[t] - 1;
                self.excess[t] = 0;
                self.excess[t - 1] += 1;
                self.excess[m - 1] = rest;
            }
        }
    }
}

impl Iterator for CompositionIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let item = self
            .excess
            .iter()
            .zip(&self.mins)
            .map(|(e, m)| e + m)
            .collect();
        self.advance();
        Some(item)
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(what))
    }
}

fn check_rk(s: u32, r: u32, n: u32, k: u32) -> Result<()> {
    require(
        k >= r && n >= s * k,
        &format!("explicit formula needs k >= r and n >= sk, got s={s} r={r} n={n} k={k}"),
    )
}

/// `(n-r)! / (k-r)!` for `k >= r`, `n >= k`.
fn prefactor(r: u32, n: u32, k: u32) -> Count {
    let num = factorial((n - r) as u64);
    num / factorial((k - r) as u64)
}

fn lah_value(store: &Triangles, s: u32, n: i64, k: i64) -> Count {
    store.get(Kind::Lah, s, 0, n, k)
}

/// `(n!/k!) C(n-(s-1)k-1, k-1)`.
pub fn lah_explicit(s: u32, n: u32, k: u32) -> Result<Count> {
    require(
        s >= 1 && k >= 1 && n >= s * k,
        "Lah explicit formula needs s, k >= 1 and n >= sk",
    )?;
    let lead = factorial(n as u64) / factorial(k as u64);
    Ok(lead * binomial(n as i64 - (s as i64 - 1) * k as i64 - 1, k as i64 - 1))
}

/// Checks `L(n,k) = n!/((n-s)! k) L(n-s,k-1) + n L(n-1,k)` over exact
/// rationals, on values read from the store.
pub fn lah_rational_recurrence_check(store: &Triangles, s: u32, n: u32, k: u32) -> bool {
    if k == 0 || n < s || n < s * k {
        return false;
    }
    let (ni, ki) = (n as i64, k as i64);
    let lhs = rat_from_count(&lah_value(store, s, ni, ki));
    let coeff = ratio(
        &falling_factorial(n as u64, s as u64).expect("n >= s"),
        &Count::from(k),
    )
    .expect("k >= 1");
    let rhs = coeff * rat_from_count(&lah_value(store, s, ni - s as i64, ki - 1))
        + rat_from_u64(n as u64) * rat_from_count(&lah_value(store, s, ni - 1, ki));
    rhs.is_integer() && lhs == rhs
}

/// `(n!/k!) sum_i ((k-i)!/(n-p-(s-1)i)!) C(p,i) L(n-(s-1)i-p, k-i)`.
///
/// Holds for `0 <= p <= n-(s-1)k-1`; larger `p` is rejected.
pub fn lah_vandermonde(store: &Triangles, s: u32, n: u32, k: u32, p: u32) -> Result<Count> {
    require(
        s >= 1 && k >= 1 && n >= s * k,
        "Vandermonde sum needs k >= 1 and n >= sk",
    )?;
    let bound = n as i64 - (s as i64 - 1) * k as i64 - 1;
    require(
        (p as i64) <= bound,
        &format!("Vandermonde sum needs p <= n-(s-1)k-1 = {bound}, got p = {p}"),
    )?;
    let mut acc = Rat::zero();
    for i in 0..=p.min(k) {
        let rest = n as i64 - p as i64 - (s as i64 - 1) * i as i64;
        if rest < 0 {
            continue;
        }
        let weight = ratio(&factorial((k - i) as u64), &factorial(rest as u64))?;
        let term = weight
            * rat_from_count(&binomial(p as i64, i as i64))
            * rat_from_count(&lah_value(store, s, rest, (k - i) as i64));
        acc += term;
    }
    acc *= ratio(&factorial(n as u64), &factorial(k as u64))?;
    rat_to_count(&acc)
}

/// `sum_{i=s(k-1)}^{n-s} (n-i)! C(n-1,i) L(i,k-1)`.
pub fn lah_vertical(store: &Triangles, s: u32, n: u32, k: u32) -> Result<Count> {
    require(
        s >= 1 && k >= 1 && n >= s * k,
        "vertical recurrence needs k >= 1 and n >= sk",
    )?;
    let mut acc = Count::zero();
    for i in s * (k - 1)..=n - s {
        acc += factorial((n - i) as u64)
            * binomial(n as i64 - 1, i as i64)
            * lah_value(store, s, i as i64, k as i64 - 1);
    }
    Ok(acc)
}

/// First kind:
/// `((n-r)!/(k-r)!) sum_m C(m+r-1,r-1) sum_{i_{r+1}+..+i_k = n-sk-m} prod 1/(i_j+s)`.
pub fn s1_explicit(s: u32, r: u32, n: u32, k: u32) -> Result<Count> {
    check_rk(s, r, n, k)?;
    let free = n - s * k;
    let mut acc = Rat::zero();
    for m in 0..=free {
        let outer = compositions_count(m as i64, r as i64);
        if outer.is_zero() {
            continue;
        }
        let mut inner = Rat::zero();
        for comp in CompositionIter::new((free - m) as u64, (k - r) as usize, 0) {
            let den: Count = comp.iter().map(|&i| Count::from(i + s as u64)).product();
            inner += ratio(&Count::from(1u32), &den)?;
        }
        acc += rat_from_count(&outer) * inner;
    }
    acc *= rat_from_count(&prefactor(r, n, k));
    rat_to_count(&acc)
}

/// Second kind:
/// `((n-r)!/(k-r)!) sum_{i_1+..+i_k = n-sk} prod_{j<=r} 1/(i_j+s-1)! prod_{j>r} 1/(i_j+s)!`.
pub fn s2_explicit(s: u32, r: u32, n: u32, k: u32) -> Result<Count> {
    check_rk(s, r, n, k)?;
    let mut acc = Rat::zero();
    for comp in CompositionIter::new((n - s * k) as u64, k as usize, 0) {
        let den: Count = comp
            .iter()
            .enumerate()
            .map(|(j, &i)| {
                let shift = if (j as u32) < r { s - 1 } else { s };
                factorial(i + shift as u64)
            })
            .product();
        acc += ratio(&Count::from(1u32), &den)?;
    }
    acc *= rat_from_count(&prefactor(r, n, k));
    rat_to_count(&acc)
}

/// Shared shape of the two binomial-sum forms of the r-Lah numbers:
/// `((n-r)!/(k-r)!) sum_j C(r,j) C(top(j), k+j-1) base^(r-j)`.
fn lah_binomial_sum(r: u32, n: u32, k: u32, base: u64, top: impl Fn(i64) -> i64) -> Count {
    if k == 0 {
        // only the empty structure survives
        return if n == 0 {
            Count::from(1u32)
        } else {
            Count::zero()
        };
    }
    let sum: Count = (0..=r as i64)
        .map(|j| {
            binomial(r as i64, j)
                * binomial(top(j), k as i64 + j - 1)
                * pow(base, r as u64 - j as u64)
        })
        .sum();
    prefactor(r, n, k) * sum
}

/// `((n-r)!/(k-r)!) sum_j C(r,j) C(n-(s-1)k-1, k+j-1) s^(r-j)`.
pub fn lah_r_explicit_exl(s: u32, r: u32, n: u32, k: u32) -> Result<Count> {
    check_rk(s, r, n, k)?;
    let top = n as i64 - (s as i64 - 1) * k as i64 - 1;
    Ok(lah_binomial_sum(r, n, k, s as u64, |_| top))
}

/// `((n-r)!/(k-r)!) sum_j C(r,j) C(n+j-(s-1)k-1, k+j-1) (s-1)^(r-j)`, with `0^0 = 1`.
pub fn lah_r_explicit_onesum(s: u32, r: u32, n: u32, k: u32) -> Result<Count> {
    check_rk(s, r, n, k)?;
    let top = n as i64 - (s as i64 - 1) * k as i64 - 1;
    Ok(lah_binomial_sum(r, n, k, s as u64 - 1, |j| top + j))
}

/// `((n-r)!/(k-r)!) sum_{i_1+..+i_k = n-sk} (i_1+s)..(i_r+s)`.
pub fn lah_r_explicit_composition(s: u32, r: u32, n: u32, k: u32) -> Result<Count> {
    check_rk(s, r, n, k)?;
    let sum: Count = CompositionIter::new((n - s * k) as u64, k as usize, 0)
        .map(|comp| {
            comp[..r as usize]
                .iter()
                .map(|&i| Count::from(i + s as u64))
                .product::<Count>()
        })
        .sum();
    Ok(prefactor(r, n, k) * sum)
}

/// The `k = r` column in closed form.
pub fn diagonal_k_equals_r(kind: Kind, s: u32, r: u32, n: u32) -> Result<Count> {
    require(s >= 1 && n >= s * r, "diagonal formula needs n >= sr")?;
    if r == 0 {
        return Ok(if n == 0 {
            Count::from(1u32)
        } else {
            Count::zero()
        });
    }
    let (ri, ni, si) = (r as i64, n as i64, s as i64);
    let lead = factorial((n - r) as u64);
    Ok(match kind {
        Kind::FirstKind => lead * binomial(ni - ri * (si - 1) - 1, ri - 1),
        Kind::SecondKind => {
            let mut acc = Count::zero();
            for comp in CompositionIter::new((n - r) as u64, r as usize, s as u64 - 1) {
                acc += multinomial((n - r) as u64, &comp[..comp.len() - 1])?;
            }
            acc
        }
        Kind::Lah => {
            let sum: Count = (0..=ri)
                .map(|i| {
                    binomial(ri, i)
                        * binomial(ni - (si - 1) * ri - 1, ri + i - 1)
                        * pow(s as u64, (ri - i) as u64)
                })
                .sum();
            lead * sum
        }
    })
}

/// Evaluates the family's own closed form at an in-domain cell.
pub fn explicit_value(p: &Params, n: u32, k: u32) -> Result<Count> {
    let (s, r) = (p.s(), p.r());
    if !Cell::new(n, k).in_domain(p) {
        return Ok(Count::zero());
    }
    match p.kind() {
        Kind::FirstKind => s1_explicit(s, r, n, k),
        Kind::SecondKind => s2_explicit(s, r, n, k),
        Kind::Lah => lah_r_explicit_exl(s, r, n, k),
    }
}
