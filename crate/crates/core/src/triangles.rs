//! Memoized triangular recurrences for the three sequence families.
//!
//! For `n >= s k` and `k >= r` every family satisfies a three-term recurrence
//! that couples the `r` triangle to the `r - 1` triangle:
//!
//! ```text
//! T[n,k]_r = C(n-r-1, s-1) w T[n-s,k-1]_r + r C(n-r-1, s-2) w T[n-s,k-1]_{r-1} + m T[n-1,k]_r
//! ```
//!
//! with `(w, m)` equal to `((s-1)!, n-1)` for cycles, `(1, k)` for subsets and
//! `(s!, n+k-1)` for ordered lists. Cells with `k < r`, `n < s k` or `n < r`
//! are zero; the only anchors are the cells with `n = r`, which hold
//! `[k = r]` (this covers `T[0,0]_0 = 1`, and for `r > 0` it can only be
//! reached with `s = 1`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::binomial;
use crate::Count;

/// Which of the three families a triangle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Permutations into cycles.
    #[serde(rename = "s1")]
    FirstKind,
    /// Set partitions into blocks.
    #[serde(rename = "s2")]
    SecondKind,
    /// Set partitions into ordered lists.
    #[serde(rename = "lah")]
    Lah,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::FirstKind, Kind::SecondKind, Kind::Lah];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::FirstKind => "s1",
            Kind::SecondKind => "s2",
            Kind::Lah => "lah",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s1" | "first" | "firstkind" => Ok(Kind::FirstKind),
            "s2" | "second" | "secondkind" => Ok(Kind::SecondKind),
            "lah" | "l" | "third" => Ok(Kind::Lah),
            other => Err(Error::domain(format!("unknown kind {other:?}"))),
        }
    }
}

/// Selects one triangle: a family, the number `r` of distinguished leading
/// elements and the minimum part size `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    kind: Kind,
    r: u32,
    s: u32,
}

impl Params {
    pub fn new(kind: Kind, r: u32, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("s must be at least 1"));
        }
        Ok(Params { kind, r, s })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={} s={}", self.kind, self.r, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub n: u32,
    pub k: u32,
}

impl Cell {
    pub fn new(n: u32, k: u32) -> Self {
        Cell { n, k }
    }

    pub fn in_domain(&self, p: &Params) -> bool {
        in_domain(p.s, p.r, self.n as i64, self.k as i64)
    }
}

fn in_domain(s: u32, r: u32, n: i64, k: i64) -> bool {
    k >= r as i64 && n >= s as i64 * k && n >= r as i64 && k >= 0
}

type Key = (Kind, u32, u32, u32, u32);

/// Write-once memo of triangle values, keyed by `(kind, s, r, n, k)`.
///
/// Safe to share between threads: concurrent misses may compute the same cell
/// twice, but they store identical values and a stored value is never
/// replaced.
#[derive(Debug)]
pub struct TriangleStore<T> {
    memo: RwLock<HashMap<Key, T>>,
    cap: Option<usize>,
}

impl<T> Default for TriangleStore<T> {
    fn default() -> Self {
        TriangleStore {
            memo: RwLock::new(HashMap::new()),
            cap: None,
        }
    }
}

impl<T> TriangleStore<T>
where
    T: Clone + Num + FromPrimitive,
{
    pub fn new() -> Self {
        Self::default()
    }

    /// A store that stops memoizing once it holds `cap` cells. Values stay
    /// exact; later misses are simply recomputed.
    pub fn with_cap(cap: Option<usize>) -> Self {
        TriangleStore {
            memo: RwLock::new(HashMap::new()),
            cap,
        }
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The value of the cell; zero outside the domain.
    pub fn value(&self, p: &Params, c: Cell) -> T {
        self.get(p.kind, p.s, p.r, c.n as i64, c.k as i64)
    }

    /// Like [`value`](Self::value) but accepting possibly negative indices,
    /// which are always zero.
    pub fn get(&self, kind: Kind, s: u32, r: u32, n: i64, k: i64) -> T {
        if !in_domain(s, r, n, k) {
            return T::zero();
        }
        let key = (kind, s, r, n as u32, k as u32);
        if let Some(v) = self.memo.read().expect("memo lock poisoned").get(&key) {
            return v.clone();
        }
        self.fill(kind, s, r, n as u32, k as u32)
    }

    /// All in-domain cells of row `n`, in increasing `k`. The zero cell
    /// `k = 0` is only listed for `n = 0`.
    pub fn row(&self, p: &Params, n: u32) -> Vec<(u32, T)> {
        if n < p.r {
            return Vec::new();
        }
        let lo = if n == 0 { 0 } else { p.r.max(1) };
        (lo..=n / p.s)
            .filter(|&k| Cell::new(n, k).in_domain(p))
            .map(|k| (k, self.value(p, Cell::new(n, k))))
            .collect()
    }

    /// The classical number (`r = 0`, `s = 1`).
    pub fn classical_value(&self, kind: Kind, n: u32, k: u32) -> T {
        self.get(kind, 1, 0, n as i64, k as i64)
    }

    // Bottom-up over the region rr <= r, nn <= n, kk <= k; every cell the
    // recurrence reads lies inside it.
    fn fill(&self, kind: Kind, s: u32, r: u32, n: u32, k: u32) -> T {
        let (rn, nn_len, kn) = (r as usize + 1, n as usize + 1, k as usize + 1);
        let idx =
            |rr: u32, nn: u32, kk: u32| (rr as usize * nn_len + nn as usize) * kn + kk as usize;
        let mut local: Vec<T> = vec![T::zero(); rn * nn_len * kn];
        let mut fresh: Vec<(Key, T)> = Vec::new();
        let read = |local: &Vec<T>, rr: i64, nn: i64, kk: i64| -> T {
            if rr < 0 || !in_domain(s, rr as u32, nn, kk) {
                T::zero()
            } else {
                local[idx(rr as u32, nn as u32, kk as u32)].clone()
            }
        };
        let weight = small_factorial::<T>(match kind {
            Kind::FirstKind => s as u64 - 1,
            Kind::SecondKind => 0,
            Kind::Lah => s as u64,
        });
        {
            let memo = self.memo.read().expect("memo lock poisoned");
            for rr in 0..=r {
                for nn in rr..=n {
                    for kk in rr..=k.min(nn / s) {
                        let key = (kind, s, rr, nn, kk);
                        let v = if let Some(v) = memo.get(&key) {
                            v.clone()
                        } else {
                            let v = Self::step(kind, s, rr, nn, kk, &weight, |a, b, c| {
                                read(&local, a, b, c)
                            });
                            fresh.push((key, v.clone()));
                            v
                        };
                        local[idx(rr, nn, kk)] = v;
                    }
                }
            }
        }
        let result = local[idx(r, n, k)].clone();
        let mut memo = self.memo.write().expect("memo lock poisoned");
        for (key, v) in fresh {
            if self.cap.is_some_and(|cap| memo.len() >= cap) {
                break;
            }
            memo.entry(key).or_insert(v);
        }
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn step(
        kind: Kind,
        s: u32,
        r: u32,
        n: u32,
        k: u32,
        weight: &T,
        read: impl Fn(i64, i64, i64) -> T,
    ) -> T {
        if n == r {
            return if k == r { T::one() } else { T::zero() };
        }
        let (n, k, r_, s_) = (n as i64, k as i64, r as i64, s as i64);
        let own = small_binomial::<T>(n - r_ - 1, s_ - 1) * weight.clone();
        let mut acc = own * read(r_, n - s_, k - 1);
        if r > 0 {
            let cross =
                small::<T>(r as u64) * small_binomial::<T>(n - r_ - 1, s_ - 2) * weight.clone();
            acc = acc + cross * read(r_ - 1, n - s_, k - 1);
        }
        let mult = match kind {
            Kind::FirstKind => n - 1,
            Kind::SecondKind => k,
            Kind::Lah => n + k - 1,
        };
        acc + small::<T>(mult as u64) * read(r_, n - 1, k)
    }
}

fn small<T: FromPrimitive>(v: u64) -> T {
    T::from_u64(v).expect("scalar type too narrow for this triangle")
}

fn small_factorial<T: Clone + Num + FromPrimitive>(n: u64) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * small::<T>(i))
}

fn small_binomial<T: Clone + Num + FromPrimitive>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(T::one(), |acc, i| {
        acc * small::<T>(n - i) / small::<T>(i + 1)
    })
}

/// The s-associated Lah numbers (`r = 0`) straight from their own two-term
/// recurrence `L(n,k) = C(n-1,s-1) s! L(n-s,k-1) + (n+k-1) L(n-1,k)`.
///
/// Shares no code with [`TriangleStore`]; used to cross-check it.
pub fn associated_lah(s: u32, n: u32, k: u32) -> Count {
    assert!(s >= 1, "s must be at least 1");
    let (n, k) = (n as usize, k as usize);
    let s_ = s as usize;
    let s_fact = crate::exactnum::factorial(s as u64);
    let mut table = vec![vec![Count::from(0u32); k + 1]; n + 1];
    table[0][0] = Count::from(1u32);
    for nn in 1..=n {
        for kk in 1..=k.min(nn / s_) {
            let mut v = Count::from((nn + kk - 1) as u64) * &table[nn - 1][kk];
            if nn >= s_ {
                v += binomial(nn as i64 - 1, s_ as i64 - 1) * &s_fact * &table[nn - s_][kk - 1];
            }
            table[nn][kk] = v;
        }
    }
    table[n][k].clone()
}
