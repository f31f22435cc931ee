//! Reduction, cross-recurrence and convolution identities, checked over
//! parameter grids.
//!
//! Each checker evaluates both sides exactly and returns them as rationals;
//! sequence values always come from the recurrence engine.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::CompositionIter;
use crate::exactnum::{
    binomial, compositions_count, factorial, multinomial, pow, rat_from_count, ratio,
};
use crate::oracle::{enumerate_count, OracleConfig, Shape, StructureSpec};
use crate::triangles::Kind;
use crate::{Count, Rat, Triangles};

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub lhs: Rat,
    pub rhs: Rat,
}

impl Check {
    pub fn new(lhs: Rat, rhs: Rat) -> Self {
        Check { lhs, rhs }
    }

    /// A trivially holding check, for checkers that compare many values and
    /// report only the first mismatch.
    pub fn agreed() -> Self {
        Check::new(Rat::zero(), Rat::zero())
    }

    pub fn counts(lhs: Count, rhs: Count) -> Self {
        Check::new(rat_from_count(&lhs), rat_from_count(&rhs))
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub point: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity at every point of a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_name: String,
    /// Names of the coordinates of each grid point.
    pub columns: Vec<String>,
    pub grid: Vec<Vec<u32>>,
    pub failures: Vec<Failure>,
    /// Advisory reports record disagreement without counting as a failure.
    pub advisory: bool,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates `check` at every point in parallel; failures come back sorted.
pub fn run_grid<F>(name: &str, columns: &[&str], grid: Vec<Vec<u32>>, check: F) -> IdentityReport
where
    F: Fn(&[u32]) -> Check + Sync,
{
    let mut failures: Vec<Failure> = grid
        .par_iter()
        .filter_map(|point| {
            let c = check(point);
            (!c.holds()).then(|| Failure {
                point: point.clone(),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            })
        })
        .collect();
    failures.sort_by(|a, b| a.point.cmp(&b.point));
    IdentityReport {
        identity_name: name.to_string(),
        columns: columns.iter().map(|c| c.to_string()).collect(),
        grid,
        failures,
        advisory: false,
    }
}

fn t(store: &Triangles, kind: Kind, s: u32, r: u32, n: i64, k: i64) -> Count {
    store.get(kind, s, r, n, k)
}

/// `a! / (a-b)!`, zero when `b > a` or `a < 0`.
fn fall(a: i64, b: i64) -> Count {
    if a < 0 || b < 0 || b > a {
        return Count::from(0u32);
    }
    factorial(a as u64) / factorial((a - b) as u64)
}

fn q(c: Count) -> Rat {
    rat_from_count(&c)
}

/// First kind in terms of the `(r-p)` triangle:
/// `sum_i (n-r)!/(n-r-i)! C(i-p(s-2)-1, p-1) S1[n-p-i, k-p]_{r-p}`.
///
/// The binomial is read as the number of compositions of `i-(s-1)p` into `p`
/// parts, which agrees for `p >= 1` and makes `p = 0` collapse to the left side.
pub fn check_s1_reduction(store: &Triangles, s: u32, r: u32, p: u32, n: u32, k: u32) -> Check {
    let (si, ri, pi, ni, ki) = (s as i64, r as i64, p as i64, n as i64, k as i64);
    let lhs = t(store, Kind::FirstKind, s, r, ni, ki);
    let mut rhs = Count::from(0u32);
    for i in (si - 1) * pi..=ni - pi - si * (ki - pi) {
        rhs += fall(ni - ri, i)
            * compositions_count(i - (si - 1) * pi, pi)
            * t(store, Kind::FirstKind, s, r - p, ni - pi - i, ki - pi);
    }
    Check::counts(lhs, rhs)
}

/// Second kind, splitting off the parts of the first `p` elements:
/// `sum_i (n-r)!/((s-1)!^p (n-p(s-1)-r)!) C(n-p(s-1)-r, i) S2[i+r-p, k-p]_{r-p} p^(n-p(s-1)-r-i)`.
pub fn check_s2_p_split(store: &Triangles, s: u32, r: u32, p: u32, n: u32, k: u32) -> Check {
    let (si, ri, pi, ni, ki) = (s as i64, r as i64, p as i64, n as i64, k as i64);
    let lhs = q(t(store, Kind::SecondKind, s, r, ni, ki));
    let free = ni - pi * (si - 1) - ri;
    let mut rhs = Rat::from_integer(0.into());
    if free >= 0 {
        let head = ratio(
            &factorial((ni - ri) as u64),
            &(factorial(s as u64 - 1).pow(p) * factorial(free as u64)),
        )
        .expect("nonzero denominator");
        let start = (pi - ri + si * (ki - pi)).max(0);
        for i in start..=free {
            let term = q(binomial(free, i)
                * t(store, Kind::SecondKind, s, r - p, i + ri - pi, ki - pi)
                * pow(p as u64, (free - i) as u64));
            rhs += &head * term;
        }
    }
    Check::new(lhs, rhs)
}

/// Second kind, grouping by the number `i` of the first `p` parts that have
/// exactly `s` elements.
pub fn check_s2_hoba(store: &Triangles, s: u32, r: u32, p: u32, n: u32, k: u32) -> Check {
    let (si, ri, pi, ni, ki) = (s as i64, r as i64, p as i64, n as i64, k as i64);
    let lhs = q(t(store, Kind::SecondKind, s, r, ni, ki));
    let mut rhs = Rat::from_integer(0.into());
    for i in 0..=pi {
        let grouped = i * (si - 1);
        let arrange = ratio(
            &factorial(grouped as u64),
            &factorial(s as u64 - 1).pow(i as u32),
        )
        .expect("nonzero");
        let place = ratio(
            &factorial((ki - ri + pi - i) as u64),
            &factorial((ki - ri) as u64),
        )
        .expect("nonzero");
        let count = binomial(pi, i)
            * binomial(ni - ri, grouped)
            * t(store, Kind::SecondKind, s, r - p, ni - pi - grouped, ki - i);
        rhs += place * arrange * q(count);
    }
    Check::new(lhs, rhs)
}

/// Lah numbers, splitting off the lists of the first `p` elements:
/// `sum_{i<=p} sum_{j=i}^{n-sk} (n-r)!/(n-r-j-(s-1)p)! C(p,i) C(p+j-1, j-i) L[n-sp-j, k-p]_{r-p} s^(p-i)`.
///
/// `C(p+j-1, j-i)` counts compositions and is read as `[j = 0]` when `p = 0`.
pub fn check_lah_reduction(store: &Triangles, s: u32, r: u32, p: u32, n: u32, k: u32) -> Check {
    let (si, ri, pi, ni, ki) = (s as i64, r as i64, p as i64, n as i64, k as i64);
    let lhs = t(store, Kind::Lah, s, r, ni, ki);
    let mut rhs = Count::from(0u32);
    for i in 0..=pi {
        for j in i..=ni - si * ki {
            let rest = ni - ri - j - (si - 1) * pi;
            if rest < 0 {
                continue;
            }
            let spread = if p == 0 {
                Count::from(u32::from(j == 0))
            } else {
                binomial(pi + j - 1, j - i)
            };
            rhs += fall(ni - ri, ni - ri - rest)
                * binomial(pi, i)
                * spread
                * t(store, Kind::Lah, s, r - p, ni - si * pi - j, ki - pi)
                * pow(s as u64, (pi - i) as u64);
        }
    }
    Check::counts(lhs, rhs)
}

/// The three recurrences that link the `r` and `r-1` triangles.
pub fn check_cross_recurrences(
    store: &Triangles,
    s: u32,
    r: u32,
    n: u32,
    k: u32,
) -> Vec<(&'static str, Check)> {
    let (si, ri, ni, ki) = (s as i64, r as i64, n as i64, k as i64);
    let range = si - 1..=ni - si * (ki - 1) - 1;
    let first: Count = range
        .clone()
        .map(|i| fall(ni - ri, i) * t(store, Kind::FirstKind, s, r - 1, ni - i - 1, ki - 1))
        .sum();
    let lah: Count = range
        .map(|i| {
            Count::from((i + 1) as u64)
                * fall(ni - ri, i)
                * t(store, Kind::Lah, s, r - 1, ni - i - 1, ki - 1)
        })
        .sum();
    let second = binomial(ni - ri, si - 1) * t(store, Kind::SecondKind, s, r - 1, ni - si, ki - 1)
        + Count::from((ki - ri + 1).max(0) as u64)
            * t(store, Kind::SecondKind, s, r - 1, ni - 1, ki);
    vec![
        (
            "first",
            Check::counts(t(store, Kind::FirstKind, s, r, ni, ki), first),
        ),
        (
            "second",
            Check::counts(t(store, Kind::SecondKind, s, r, ni, ki), second),
        ),
        ("lah", Check::counts(t(store, Kind::Lah, s, r, ni, ki), lah)),
    ]
}

/// `C(k; k_1..k_p) T[n+r, k+r]_r` against the sum over `l_1+..+l_p = n`,
/// `l_i >= s k_i + (s-1) r_i`, of `C(n; l) prod T[l_i+r_i, k_i+r_i]_{r_i}`.
pub fn check_convolution(
    store: &Triangles,
    kind: Kind,
    s: u32,
    splits_k: &[u32],
    splits_r: &[u32],
    n: u32,
) -> Check {
    assert_eq!(
        splits_k.len(),
        splits_r.len(),
        "splits must have equal length"
    );
    let k: u32 = splits_k.iter().sum();
    let r: u32 = splits_r.iter().sum();
    let ks: Vec<u64> = splits_k.iter().map(|&x| x as u64).collect();
    let lhs = multinomial(k as u64, &ks[..ks.len() - 1]).expect("parts sum to k")
        * t(store, kind, s, r, (n + r) as i64, (k + r) as i64);
    let mins: Vec<u64> = splits_k
        .iter()
        .zip(splits_r)
        .map(|(&ki, &ri)| (s * ki + (s - 1) * ri) as u64)
        .collect();
    let mut rhs = Count::from(0u32);
    for ls in CompositionIter::with_minimums(n as u64, mins) {
        let mut term = multinomial(n as u64, &ls[..ls.len() - 1]).expect("parts sum to n");
        for ((&l, &ki), &ri) in ls.iter().zip(splits_k).zip(splits_r) {
            term *= t(store, kind, s, ri, l as i64 + ri as i64, (ki + ri) as i64);
        }
        rhs += term;
    }
    Check::counts(lhs, rhs)
}

/// `sum_j C(r,j) C(m+k+j-1, m) (s-1)^(r-j)` against
/// `sum_j C(r,j) C(n-(s-1)k-1, k+j-1) s^(r-j)` with `m = n - sk`.
pub fn check_cccc(s: u32, r: u32, n: u32, k: u32) -> Check {
    let (si, ri, ni, ki) = (s as i64, r as i64, n as i64, k as i64);
    let m = ni - si * ki;
    let lhs: Count = (0..=ri)
        .map(|j| binomial(ri, j) * binomial(m + ki + j - 1, m) * pow(s as u64 - 1, (ri - j) as u64))
        .sum();
    let rhs: Count = (0..=ri)
        .map(|j| {
            binomial(ri, j)
                * binomial(ni - (si - 1) * ki - 1, ki + j - 1)
                * pow(s as u64, (ri - j) as u64)
        })
        .sum();
    Check::counts(lhs, rhs)
}

/// Printed closed form for the `n = sk` cell of the `r` triangle, read literally.
pub fn printed_special_value(kind: Kind, s: u32, r: u32, k: u32) -> Rat {
    let n = s * k;
    let num = factorial((n - r) as u64);
    let mut den = factorial((k - r) as u64);
    match kind {
        Kind::FirstKind => den *= pow(s as u64, k as u64),
        Kind::SecondKind => {
            den *= factorial(s as u64 - 1).pow(r) * factorial(s as u64).pow(k - r);
        }
        Kind::Lah => den *= pow(s as u64, r as u64),
    }
    ratio(&num, &den).expect("nonzero denominator")
}

/// Parameter bounds for the identity grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridBounds {
    pub s_max: u32,
    pub r_max: u32,
    pub k_max: u32,
    pub n_max: u32,
    pub conv_n_max: u32,
    pub conv_k_max: u32,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            s_max: 3,
            r_max: 3,
            k_max: 5,
            n_max: 12,
            conv_n_max: 10,
            conv_k_max: 4,
        }
    }
}

/// Points `(s, r, p, n, k)` with `p <= r <= k` and `sk <= n`.
fn reduction_grid(b: &GridBounds) -> Vec<Vec<u32>> {
    let mut grid = Vec::new();
    for s in 1..=b.s_max {
        for r in 0..=b.r_max {
            for p in 0..=r {
                for k in r..=b.k_max {
                    for n in s * k..=b.n_max {
                        grid.push(vec![s, r, p, n, k]);
                    }
                }
            }
        }
    }
    grid
}

/// Points `(s, r, n, k)` with `r <= k`, `sk <= n` and `r >= r_min`.
fn srnk_grid(b: &GridBounds, r_min: u32) -> Vec<Vec<u32>> {
    let mut grid = Vec::new();
    for s in 1..=b.s_max {
        for r in r_min..=b.r_max {
            for k in r..=b.k_max {
                for n in s * k..=b.n_max {
                    grid.push(vec![s, r, n, k]);
                }
            }
        }
    }
    grid
}

pub fn reduction_reports(store: &Triangles, b: &GridBounds) -> Vec<IdentityReport> {
    let columns = ["s", "r", "p", "n", "k"];
    let grid = reduction_grid(b);
    type Checker = fn(&Triangles, u32, u32, u32, u32, u32) -> Check;
    let checkers: [(&str, Checker); 4] = [
        ("s1-reduction", check_s1_reduction),
        ("s2-p-split", check_s2_p_split),
        ("s2-hoba", check_s2_hoba),
        ("lah-reduction", check_lah_reduction),
    ];
    checkers
        .iter()
        .map(|(name, f)| {
            run_grid(name, &columns, grid.clone(), |x| {
                f(store, x[0], x[1], x[2], x[3], x[4])
            })
        })
        .collect()
}

pub fn cross_reports(store: &Triangles, b: &GridBounds) -> Vec<IdentityReport> {
    let grid = srnk_grid(b, 1);
    ["first", "second", "lah"]
        .iter()
        .enumerate()
        .map(|(idx, label)| {
            run_grid(
                &format!("cross-{label}"),
                &["s", "r", "n", "k"],
                grid.clone(),
                |x| {
                    check_cross_recurrences(store, x[0], x[1], x[2], x[3])
                        .swap_remove(idx)
                        .1
                },
            )
        })
        .collect()
}

pub fn cccc_report(b: &GridBounds) -> IdentityReport {
    run_grid(
        "binomial-sum-duality",
        &["s", "r", "n", "k"],
        srnk_grid(b, 0),
        |x| check_cccc(x[0], x[1], x[2], x[3]),
    )
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn splits(total: u32, parts: usize) -> Vec<Vec<u32>> {
    CompositionIter::new(total as u64, parts, 0)
        .map(|c| c.into_iter().map(|x| x as u32).collect())
        .collect()
}

/// One report per kind; points are `(s, p, k_1..k_p, r_1..r_p, n)` flattened.
pub fn convolution_reports(store: &Triangles, b: &GridBounds) -> Vec<IdentityReport> {
    Kind::ALL
        .iter()
        .map(|&kind| {
            let mut grid = Vec::new();
            for s in 1..=b.s_max {
                for p in [2usize, 3] {
                    for k in 0..=b.conv_k_max {
                        for r in 0..=b.r_max {
                            for ks in splits(k, p) {
                                for rs in splits(r, p) {
                                    for n in 0..=b.conv_n_max {
                                        let mut point = vec![s, p as u32];
                                        point.extend(&ks);
                                        point.extend(&rs);
                                        point.push(n);
                                        grid.push(point);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            run_grid(
                &format!("convolution-{}", kind.as_str()),
                &["s", "p", "k_1..k_p", "r_1..r_p", "n"],
                grid,
                |x| {
                    let p = x[1] as usize;
                    check_convolution(
                        store,
                        kind,
                        x[0],
                        &x[2..2 + p],
                        &x[2 + p..2 + 2 * p],
                        x[2 + 2 * p],
                    )
                },
            )
        })
        .collect()
}

/// Compares enumerated counts at `n = sk` with the printed formulas for
/// `r = 1..3`, `s = 2..3`, `k <= 4`. Advisory only.
pub fn special_value_reports() -> Vec<IdentityReport> {
    let config = OracleConfig {
        cycles_cap: 12,
        subsets_cap: 12,
        lists_cap: 12,
    };
    Kind::ALL
        .iter()
        .map(|&kind| {
            let mut grid = Vec::new();
            for s in 2..=3 {
                for r in 1..=3 {
                    for k in r..=4 {
                        grid.push(vec![s, r, k]);
                    }
                }
            }
            let mut report = run_grid(
                &format!("special-value-n=sk-{}", kind.as_str()),
                &["s", "r", "k"],
                grid,
                |x| {
                    let (s, r, k) = (x[0], x[1], x[2]);
                    let spec = StructureSpec::new(s * k, k, r, s, Shape::for_kind(kind));
                    let counted = enumerate_count(&spec, &config).expect("within raised cap");
                    Check::new(q(counted), printed_special_value(kind, s, r, k))
                },
            );
            report.advisory = true;
            report
        })
        .collect()
}

/// The `r = 0` special values, which are asserted rather than advisory.
pub fn classical_special_value(kind: Kind, s: u32, k: u32) -> Rat {
    let n = s as u64 * k as u64;
    let den = factorial(k as u64)
        * match kind {
            Kind::FirstKind => pow(s as u64, k as u64),
            Kind::SecondKind => factorial(s as u64).pow(k),
            Kind::Lah => Count::from(1u32),
        };
    ratio(&factorial(n), &den).expect("nonzero")
}
