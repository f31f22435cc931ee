//! Binomial identities for sums over compositions.
//!
//! The top-level functions return the closed forms; [`brute`] evaluates the
//! same quantities by iterating over compositions, for verification.

use crate::closedform::CompositionIter;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, pow};
use crate::Count;

/// Per-part offsets `alpha_i` and lower indices `beta_i` with `beta_i >= alpha_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiParams {
    alphas: Vec<u64>,
    betas: Vec<u64>,
}

impl MultiParams {
    pub fn new(alphas: Vec<u64>, betas: Vec<u64>) -> Result<Self> {
        if alphas.len() != betas.len() || alphas.is_empty() {
            return Err(Error::domain(format!(
                "need equally many alphas and betas, at least one, got {} and {}",
                alphas.len(),
                betas.len()
            )));
        }
        if let Some(i) = (0..alphas.len()).find(|&i| betas[i] < alphas[i]) {
            return Err(Error::domain(format!(
                "beta_{i} = {} is below alpha_{i} = {}",
                betas[i], alphas[i]
            )));
        }
        Ok(MultiParams { alphas, betas })
    }

    pub fn r(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }
}

fn i(v: u64) -> i64 {
    v as i64
}

/// `C(k + alpha + r - 1, beta + r - 1)` with `alpha`, `beta` the sums of the parts.
pub fn multi_binomial_sum(mp: &MultiParams, k: u64) -> Count {
    let alpha: u64 = mp.alphas.iter().sum();
    let beta: u64 = mp.betas.iter().sum();
    let r = mp.r() as u64;
    binomial(i(k + alpha + r) - 1, i(beta + r) - 1)
}

/// Sum of `k_1 .. k_r` over compositions of `n`: `C(n + r - 1, 2r - 1)`.
pub fn product_sum_all(r: u64, n: u64) -> Result<Count> {
    if r == 0 {
        return Err(Error::domain("product sum needs r >= 1"));
    }
    Ok(binomial(i(n + r) - 1, i(2 * r) - 1))
}

/// Sum of `k_1 .. k_p` over compositions of `n` into `r` parts: `C(n + r - 1, r + p - 1)`.
pub fn product_sum_partial(r: u64, p: u64, n: u64) -> Result<Count> {
    if p == 0 || p > r {
        return Err(Error::domain(format!(
            "partial product sum needs 1 <= p <= r, got p={p} r={r}"
        )));
    }
    Ok(binomial(i(n + r) - 1, i(r + p) - 1))
}

/// Sum of `(i_1 + alpha) .. (i_k + alpha)` over compositions of `n` into `k` parts:
/// `sum_j C(k,j) C(n+k-1, n-j) alpha^(k-j)`.
pub fn shifted_product_sum(k: u64, n: u64, alpha: u64) -> Result<Count> {
    if k == 0 {
        return Err(Error::domain("shifted product sum needs k >= 1"));
    }
    Ok((0..=k)
        .map(|j| binomial(i(k), i(j)) * binomial(i(n + k) - 1, i(n) - i(j)) * pow(alpha, k - j))
        .sum())
}

/// Sum of `(i_1 + s) .. (i_r + s)` over compositions of `n` into `k` parts:
/// `sum_j C(r,j) C(n+k+j-1, n) (s-1)^(r-j)`.
pub fn dual_partial_shifted_sum(k: u64, r: u64, n: u64, s: u64) -> Result<Count> {
    if r > k || s == 0 {
        return Err(Error::domain(format!(
            "dual sum needs r <= k and s >= 1, got r={r} k={k} s={s}"
        )));
    }
    Ok((0..=r)
        .map(|j| binomial(i(r), i(j)) * binomial(i(n + k + j) - 1, i(n)) * pow(s - 1, r - j))
        .sum())
}

/// Direct evaluation of each identity's left-hand side.
pub mod brute {
    use super::*;

    fn over_compositions(total: u64, parts: usize, term: impl Fn(&[u64]) -> Count) -> Count {
        CompositionIter::new(total, parts, 0)
            .map(|c| term(&c))
            .sum()
    }

    pub fn compositions(m: u64, r: usize) -> Count {
        over_compositions(m, r, |_| Count::from(1u32))
    }

    pub fn multi_binomial_sum(mp: &MultiParams, k: u64) -> Count {
        over_compositions(k, mp.r(), |c| {
            c.iter()
                .zip(mp.alphas.iter().zip(&mp.betas))
                .map(|(&ki, (&a, &b))| binomial(i(ki + a), i(b)))
                .product()
        })
    }

    pub fn product_sum_partial(r: u64, p: u64, n: u64) -> Count {
        over_compositions(n, r as usize, |c| {
            c[..p as usize].iter().map(|&x| Count::from(x)).product()
        })
    }

    pub fn product_sum_all(r: u64, n: u64) -> Count {
        product_sum_partial(r, r, n)
    }

    pub fn shifted_product_sum(k: u64, n: u64, alpha: u64) -> Count {
        dual_partial_shifted_sum(k, k, n, alpha)
    }

    pub fn dual_partial_shifted_sum(k: u64, r: u64, n: u64, s: u64) -> Count {
        over_compositions(n, k as usize, |c| {
            c[..r as usize]
                .iter()
                .map(|&x| Count::from(x + s))
                .product()
        })
    }
}
