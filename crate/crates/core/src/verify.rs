//! Verification suites: every independent computation path and every
//! identity, run over configurable grids and collected into one report.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::closedform::{
    diagonal_k_equals_r, explicit_value, lah_r_explicit_composition, lah_r_explicit_exl,
    lah_r_explicit_onesum, lah_rational_recurrence_check, lah_vandermonde, lah_vertical,
};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, rat_from_count, rat_from_u64};
use crate::fps::{coefficient_count, double_egf, egf_column, value_via_egf};
use crate::identities::{
    cccc_report, classical_special_value, convolution_reports, cross_reports, reduction_reports,
    run_grid, special_value_reports, Check, GridBounds, IdentityReport,
};
use crate::nestedsums::{self, brute, MultiParams};
use crate::oracle::{oracle_value, OracleConfig};
use crate::triangles::{associated_lah, Kind, Params};
use crate::{Cell, Count, Rat, Series, Triangles};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Recurrences,
    Explicit,
    Egf,
    NestedSums,
    Reductions,
    Cross,
    Convolutions,
    SpecialValues,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Recurrences,
        Suite::Explicit,
        Suite::Egf,
        Suite::NestedSums,
        Suite::Reductions,
        Suite::Cross,
        Suite::Convolutions,
        Suite::SpecialValues,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Explicit => "explicit",
            Suite::Egf => "egf",
            Suite::NestedSums => "nested-sums",
            Suite::Reductions => "reductions",
            Suite::Cross => "cross",
            Suite::Convolutions => "convolutions",
            Suite::SpecialValues => "special-values",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Largest row for engine, closed-form and identity grids.
    pub n_max: u32,
    /// Largest row compared against enumeration.
    pub oracle_n_max: u32,
    /// Truncation order for generating-function checks.
    pub order: u32,
    /// Largest shifted column for generating-function checks.
    pub egf_k_max: u32,
    /// Truncation order for the double generating functions.
    pub double_order: u32,
    /// Largest row for the classical degeneration checks.
    pub classical_n_max: u32,
    pub grid: GridBounds,
    pub oracle: OracleConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 12,
            oracle_n_max: 10,
            order: 18,
            egf_k_max: 4,
            double_order: 12,
            classical_n_max: 15,
            grid: GridBounds::default(),
            oracle: OracleConfig::default(),
        }
    }
}

impl VerifyConfig {
    /// Applies a row bound to every grid it caps.
    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.n_max = n_max;
        self.oracle_n_max = self.oracle_n_max.min(n_max);
        self.grid.n_max = n_max;
        self.grid.conv_n_max = self.grid.conv_n_max.min(n_max);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub reports: Vec<IdentityReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.advisory || r.passed())
    }

    pub fn failing(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.advisory && !r.passed())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for report in &self.reports {
            let status = match (report.advisory, report.passed()) {
                (false, true) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "AGREE",
                (true, false) => "DIFFER",
            };
            writeln!(
                f,
                "{status} {} points={} failures={}{}",
                report.identity_name,
                report.grid.len(),
                report.failures.len(),
                if report.advisory { " (advisory)" } else { "" }
            )?;
            for failure in &report.failures {
                let coords: Vec<String> = report
                    .columns
                    .iter()
                    .zip(&failure.point)
                    .map(|(c, v)| format!("{c}={v}"))
                    .collect();
                let point = if coords.len() == failure.point.len() {
                    coords.join(" ")
                } else {
                    format!("{:?}", failure.point)
                };
                writeln!(f, "  {point} lhs={} rhs={}", failure.lhs, failure.rhs)?;
            }
        }
        let failing = self.failing().count();
        writeln!(
            f,
            "suite {}: {} checks, {} failing",
            self.suite,
            self.reports.len(),
            failing
        )
    }
}

fn q(c: &Count) -> Rat {
    rat_from_count(c)
}

/// `(kind, s, r, n, k)` over every family with `s <= 3`, `r <= 3`, `n <= n_max`.
fn family_grid(n_max: u32) -> Vec<Vec<u32>> {
    let mut grid = Vec::new();
    for (ki, _) in Kind::ALL.iter().enumerate() {
        for s in 1..=3 {
            for r in 0..=3 {
                for n in 0..=n_max {
                    for k in 0..=n {
                        grid.push(vec![ki as u32, s, r, n, k]);
                    }
                }
            }
        }
    }
    grid
}

const FAMILY_COLUMNS: [&str; 5] = ["kind", "s", "r", "n", "k"];

fn params_of(point: &[u32]) -> Params {
    Params::new(Kind::ALL[point[0] as usize], point[2], point[1]).expect("s >= 1")
}

/// Classical triangles from the textbook two-term recurrences.
pub fn classical_table(kind: Kind, n_max: usize) -> Vec<Vec<Count>> {
    let mut t = vec![vec![Count::zero(); n_max + 1]; n_max + 1];
    t[0][0] = Count::from(1u32);
    for n in 1..=n_max {
        for k in 1..=n {
            let weight = match kind {
                Kind::FirstKind => n - 1,
                Kind::SecondKind => k,
                Kind::Lah => n + k - 1,
            };
            t[n][k] = &t[n - 1][k - 1] + Count::from(weight) * &t[n - 1][k];
        }
    }
    t
}

fn recurrence_reports(store: &Triangles, cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    out.push(run_grid(
        "engine-vs-enumeration",
        &FAMILY_COLUMNS,
        family_grid(cfg.oracle_n_max),
        |x| {
            let p = params_of(x);
            let oracle = oracle_value(&p, x[3], x[4], &cfg.oracle).expect("within cap");
            Check::new(q(&store.value(&p, Cell::new(x[3], x[4]))), q(&oracle))
        },
    ));

    let classical: Vec<_> = Kind::ALL
        .iter()
        .map(|&k| classical_table(k, cfg.classical_n_max as usize))
        .collect();
    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for n in 0..=cfg.classical_n_max {
            for k in 0..=n {
                grid.push(vec![ki, n, k]);
            }
        }
    }
    out.push(run_grid(
        "classical-degeneration",
        &["kind", "n", "k"],
        grid.clone(),
        |x| {
            let kind = Kind::ALL[x[0] as usize];
            let engine = store.classical_value(kind, x[1], x[2]);
            Check::new(
                q(&engine),
                q(&classical[x[0] as usize][x[1] as usize][x[2] as usize]),
            )
        },
    ));

    let mut grid = Vec::new();
    for n in 0..=cfg.n_max {
        for k in 0..=n {
            grid.push(vec![n, k]);
        }
    }
    out.push(run_grid(
        "lah-as-stirling-product",
        &["n", "k"],
        grid,
        |x| {
            let (n, k) = (x[0], x[1]);
            let sum: Count = (0..=n)
                .map(|j| {
                    store.classical_value(Kind::FirstKind, n, j)
                        * store.classical_value(Kind::SecondKind, j, k)
                })
                .sum();
            Check::new(q(&store.classical_value(Kind::Lah, n, k)), q(&sum))
        },
    ));

    let mut grid = Vec::new();
    for s in 1..=3 {
        for n in 0..=cfg.n_max {
            for k in 0..=n {
                grid.push(vec![s, n, k]);
            }
        }
    }
    out.push(run_grid(
        "associated-lah-two-term",
        &["s", "n", "k"],
        grid.clone(),
        |x| {
            let engine = store.get(Kind::Lah, x[0], 0, x[1] as i64, x[2] as i64);
            Check::new(q(&engine), q(&associated_lah(x[0], x[1], x[2])))
        },
    ));
    // the empty structure exists only without a distinguished element
    let nonempty: Vec<Vec<u32>> = grid.into_iter().filter(|x| x[1] > 0).collect();
    out.push(run_grid("r1-equals-r0", &["s", "n", "k"], nonempty, |x| {
        let kind_checks: Vec<Check> = Kind::ALL
            .iter()
            .map(|&kind| {
                Check::new(
                    q(&store.get(kind, x[0], 1, x[1] as i64, x[2] as i64)),
                    q(&store.get(kind, x[0], 0, x[1] as i64, x[2] as i64)),
                )
            })
            .collect();
        kind_checks
            .into_iter()
            .find(|c| !c.holds())
            .unwrap_or_else(Check::agreed)
    }));

    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for s in 1..=4 {
            for k in 0..=4 {
                grid.push(vec![ki, s, k]);
            }
        }
    }
    out.push(run_grid(
        "special-value-n=sk-r=0",
        &["kind", "s", "k"],
        grid,
        |x| {
            let kind = Kind::ALL[x[0] as usize];
            let (s, k) = (x[1], x[2]);
            Check::new(
                q(&store.get(kind, s, 0, (s * k) as i64, k as i64)),
                classical_special_value(kind, s, k),
            )
        },
    ));
    out
}

fn explicit_reports(store: &Triangles, cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    out.push(run_grid(
        "closed-form-vs-engine",
        &FAMILY_COLUMNS,
        family_grid(cfg.n_max),
        |x| {
            let p = params_of(x);
            let explicit = explicit_value(&p, x[3], x[4]).expect("integral closed form");
            Check::new(q(&store.value(&p, Cell::new(x[3], x[4]))), q(&explicit))
        },
    ));

    let mut lah_grid = Vec::new();
    for s in 1..=3 {
        for r in 0..=3 {
            for n in 0..=cfg.n_max.max(14) {
                for k in r..=n {
                    if n >= s * k {
                        lah_grid.push(vec![s, r, n, k]);
                    }
                }
            }
        }
    }
    out.push(run_grid(
        "lah-one-sum-form",
        &["s", "r", "n", "k"],
        lah_grid.clone(),
        |x| {
            Check::new(
                q(&lah_r_explicit_exl(x[0], x[1], x[2], x[3]).expect("in domain")),
                q(&lah_r_explicit_onesum(x[0], x[1], x[2], x[3]).expect("in domain")),
            )
        },
    ));
    out.push(run_grid(
        "lah-composition-form",
        &["s", "r", "n", "k"],
        lah_grid,
        |x| {
            Check::new(
                q(&lah_r_explicit_exl(x[0], x[1], x[2], x[3]).expect("in domain")),
                q(&lah_r_explicit_composition(x[0], x[1], x[2], x[3]).expect("in domain")),
            )
        },
    ));
    out.push(cccc_report(&cfg.grid));

    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for s in 1..=3 {
            for r in 0..=3 {
                for n in s * r..=cfg.n_max {
                    grid.push(vec![ki, s, r, n]);
                }
            }
        }
    }
    out.push(run_grid(
        "diagonal-k=r",
        &["kind", "s", "r", "n"],
        grid,
        |x| {
            let kind = Kind::ALL[x[0] as usize];
            Check::new(
                q(&store.get(kind, x[1], x[2], x[3] as i64, x[2] as i64)),
                q(&diagonal_k_equals_r(kind, x[1], x[2], x[3]).expect("n >= sr")),
            )
        },
    ));

    let mut grid = Vec::new();
    for s in 1..=3 {
        for n in 1..=cfg.n_max {
            for k in 1..=n / s {
                grid.push(vec![s, n, k]);
            }
        }
    }
    out.push(run_grid(
        "lah-rational-recurrence",
        &["s", "n", "k"],
        grid.clone(),
        |x| {
            let holds = lah_rational_recurrence_check(store, x[0], x[1], x[2]);
            Check::new(rat_from_u64(holds as u64), rat_from_u64(1))
        },
    ));
    out.push(run_grid(
        "lah-vertical",
        &["s", "n", "k"],
        grid.clone(),
        |x| {
            Check::new(
                q(&store.get(Kind::Lah, x[0], 0, x[1] as i64, x[2] as i64)),
                q(&lah_vertical(store, x[0], x[1], x[2]).expect("in domain")),
            )
        },
    ));
    let vandermonde_grid: Vec<Vec<u32>> = grid
        .iter()
        .flat_map(|x| {
            let bound = x[1] - (x[0] - 1) * x[2];
            (0..bound).map(move |p| vec![x[0], x[1], x[2], p])
        })
        .collect();
    out.push(run_grid(
        "lah-vandermonde",
        &["s", "n", "k", "p"],
        vandermonde_grid,
        |x| {
            Check::new(
                q(&store.get(Kind::Lah, x[0], 0, x[1] as i64, x[2] as i64)),
                q(&lah_vandermonde(store, x[0], x[1], x[2], x[3]).expect("p in range")),
            )
        },
    ));
    out
}

fn egf_reports(store: &Triangles, cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let order = cfg.order as usize;
    let mut out = Vec::new();
    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for s in 1..=3 {
            for r in 0..=3 {
                for k in 0..=cfg.egf_k_max {
                    grid.push(vec![ki, s, r, k]);
                }
            }
        }
    }
    // one series per column, compared at every row up to the order
    out.push(run_grid(
        "egf-column",
        &["kind", "s", "r", "k"],
        grid,
        |x| {
            let p = Params::new(Kind::ALL[x[0] as usize], x[2], x[1]).expect("s >= 1");
            let (r, k) = (x[2], x[3]);
            let series = egf_column(&p, k, order);
            for n in 0..=order {
                let expect = store.value(&p, Cell::new(n as u32 + r, k + r));
                let got = match coefficient_count(&series, n) {
                    Ok(v) => q(&v),
                    Err(_) => series.coeff(n) * q(&factorial(n as u64)),
                };
                if got != q(&expect) {
                    return Check::new(q(&expect), got);
                }
            }
            Check::agreed()
        },
    ));

    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for s in 1..=3 {
            for r in 0..=3 {
                for y in 1..=2 {
                    grid.push(vec![ki, s, r, y]);
                }
            }
        }
    }
    let double_order = cfg.double_order as usize;
    out.push(run_grid(
        "double-egf",
        &["kind", "s", "r", "y"],
        grid,
        |x| {
            let p = Params::new(Kind::ALL[x[0] as usize], x[2], x[1]).expect("s >= 1");
            let y = rat_from_u64(x[3] as u64);
            let closed = double_egf(&p, &y, double_order).expect("zero constant term");
            let mut summed = Series::zero(double_order);
            let mut weight = Rat::from_integer(1.into());
            for k in 0..=double_order as u32 {
                summed = summed.add(&egf_column(&p, k, double_order).scale(&weight));
                weight *= &y;
            }
            first_difference(&closed, &summed)
        },
    ));

    let mut grid = Vec::new();
    for b in 0..=5u32 {
        for a in 0..=b {
            grid.push(vec![a, b]);
        }
    }
    out.push(run_grid("binomial-series", &["alpha", "beta"], grid, |x| {
        let (a, b) = (x[0] as i64, x[1] as i64);
        let order = 15;
        let lhs = Series::from_coeffs(
            (0..=order as i64).map(|n| q(&binomial(n + a, b))).collect(),
            order,
        );
        let rhs = Series::monomial(Rat::from_integer(1.into()), (b - a) as usize, order)
            .mul(&Series::geometric(order).pow(b as u32 + 1));
        first_difference(&lhs, &rhs)
    }));

    let mut grid = Vec::new();
    for ki in 0..3u32 {
        for s in 1..=3 {
            for r in 0..=3 {
                for n in 0..=cfg.n_max {
                    for k in 0..=n {
                        grid.push(vec![ki, s, r, n, k]);
                    }
                }
            }
        }
    }
    out.push(run_grid("egf-cell-value", &FAMILY_COLUMNS, grid, |x| {
        let p = params_of(x);
        let via = value_via_egf(&p, x[3], x[4], order).expect("within order");
        Check::new(q(&store.value(&p, Cell::new(x[3], x[4]))), q(&via))
    }));
    out
}

fn first_difference(a: &Series, b: &Series) -> Check {
    let order = a.order().min(b.order());
    (0..=order)
        .find(|&i| a.coeff(i) != b.coeff(i))
        .map(|i| Check::new(a.coeff(i).clone(), b.coeff(i).clone()))
        .unwrap_or_else(Check::agreed)
}

fn nested_sum_reports() -> Vec<IdentityReport> {
    let mut out = Vec::new();

    let mut grid = Vec::new();
    for r in 1..=3usize {
        let mut pairs = vec![Vec::new()];
        for _ in 0..r {
            let mut next = Vec::new();
            for prefix in &pairs {
                for a in 0..=3u32 {
                    for b in a..=3u32 {
                        let mut v: Vec<(u32, u32)> = prefix.clone();
                        v.push((a, b));
                        next.push(v);
                    }
                }
            }
            pairs = next;
        }
        for pair_list in pairs {
            for k in 0..=10 {
                let mut point: Vec<u32> = pair_list.iter().map(|p| p.0).collect();
                point.extend(pair_list.iter().map(|p| p.1));
                point.push(k);
                grid.push(point);
            }
        }
    }
    out.push(run_grid(
        "multi-binomial-sum",
        &["alphas", "betas", "k"],
        grid,
        |x| {
            let r = (x.len() - 1) / 2;
            let alphas = x[..r].iter().map(|&v| v as u64).collect();
            let betas = x[r..2 * r].iter().map(|&v| v as u64).collect();
            let mp = MultiParams::new(alphas, betas).expect("beta >= alpha");
            let k = x[2 * r] as u64;
            Check::new(
                q(&brute::multi_binomial_sum(&mp, k)),
                q(&nestedsums::multi_binomial_sum(&mp, k)),
            )
        },
    ));

    let mut grid = Vec::new();
    for r in 1..=4 {
        for n in 0..=12 {
            grid.push(vec![r, n]);
        }
    }
    out.push(run_grid("product-sum-all", &["r", "n"], grid, |x| {
        let (r, n) = (x[0] as u64, x[1] as u64);
        Check::new(
            q(&brute::product_sum_all(r, n)),
            q(&nestedsums::product_sum_all(r, n).expect("r >= 1")),
        )
    }));

    let mut grid = Vec::new();
    for r in 1..=5 {
        for p in 1..=r {
            for n in 0..=10 {
                grid.push(vec![r, p, n]);
            }
        }
    }
    out.push(run_grid(
        "product-sum-partial",
        &["r", "p", "n"],
        grid,
        |x| {
            let (r, p, n) = (x[0] as u64, x[1] as u64, x[2] as u64);
            Check::new(
                q(&brute::product_sum_partial(r, p, n)),
                q(&nestedsums::product_sum_partial(r, p, n).expect("p <= r")),
            )
        },
    ));

    let mut grid = Vec::new();
    for k in 1..=4 {
        for n in 0..=10 {
            for a in 0..=3 {
                grid.push(vec![k, n, a]);
            }
        }
    }
    out.push(run_grid(
        "shifted-product-sum",
        &["k", "n", "alpha"],
        grid,
        |x| {
            let (k, n, a) = (x[0] as u64, x[1] as u64, x[2] as u64);
            Check::new(
                q(&brute::shifted_product_sum(k, n, a)),
                q(&nestedsums::shifted_product_sum(k, n, a).expect("k >= 1")),
            )
        },
    ));

    let mut grid = Vec::new();
    for k in 1..=4 {
        for r in 0..=k {
            for n in 0..=10 {
                for s in 1..=3 {
                    grid.push(vec![k, r, n, s]);
                }
            }
        }
    }
    out.push(run_grid(
        "dual-partial-shifted-sum",
        &["k", "r", "n", "s"],
        grid,
        |x| {
            let (k, r, n, s) = (x[0] as u64, x[1] as u64, x[2] as u64, x[3] as u64);
            Check::new(
                q(&brute::dual_partial_shifted_sum(k, r, n, s)),
                q(&nestedsums::dual_partial_shifted_sum(k, r, n, s).expect("r <= k")),
            )
        },
    ));

    let mut grid = Vec::new();
    for m in 0..=12 {
        for r in 1..=5 {
            grid.push(vec![m, r]);
        }
    }
    out.push(run_grid("composition-count", &["m", "r"], grid, |x| {
        let (m, r) = (x[0] as i64, x[1] as i64);
        Check::new(
            q(&brute::compositions(m as u64, r as usize)),
            q(&binomial(m + r - 1, r - 1)),
        )
    }));
    out
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_suite(suite: Suite, store: &Triangles, cfg: &VerifyConfig) -> VerifyReport {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut reports = Vec::new();
    for s in suites {
        reports.extend(match s {
            Suite::Recurrences => recurrence_reports(store, cfg),
            Suite::Explicit => explicit_reports(store, cfg),
            Suite::Egf => egf_reports(store, cfg),
            Suite::NestedSums => nested_sum_reports(),
            Suite::Reductions => reduction_reports(store, &cfg.grid),
            Suite::Cross => cross_reports(store, &cfg.grid),
            Suite::Convolutions => convolution_reports(store, &cfg.grid),
            Suite::SpecialValues => special_value_reports(),
            Suite::All => unreachable!("expanded above"),
        });
    }
    VerifyReport { suite, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(suite.as_str().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn classical_tables() {
        assert_eq!(
            classical_table(Kind::SecondKind, 5)[4][2],
            Count::from(7u32)
        );
        assert_eq!(classical_table(Kind::Lah, 5)[4][2], Count::from(36u32));
        assert_eq!(
            classical_table(Kind::FirstKind, 5)[4][2],
            Count::from(11u32)
        );
    }

    #[test]
    fn small_suites_pass() {
        let store = Triangles::new();
        let cfg = VerifyConfig::default().with_n_max(7);
        for suite in [Suite::Explicit, Suite::Egf, Suite::NestedSums, Suite::Cross] {
            let report = run_suite(suite, &store, &cfg);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn report_rendering_lists_failures() {
        let store = Triangles::new();
        let cfg = VerifyConfig::default().with_n_max(6);
        let report = run_suite(Suite::Reductions, &store, &cfg);
        assert!(!report.passed());
        let text = report.to_string();
        assert!(text.contains("FAIL s2-p-split"));
        assert!(text.contains("PASS s1-reduction"));
        assert!(text.contains("s=2 r=1 p=1 n=4 k=1 lhs=1 rhs=3"));
        assert_eq!(text, run_suite(Suite::Reductions, &store, &cfg).to_string());
    }
}
