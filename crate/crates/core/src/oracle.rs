//! Brute-force counting by exhaustive enumeration.
//!
//! Set partitions of `{1..n}` are generated once as restricted growth strings;
//! cycles and lists are accounted for by per-block weights, `(m-1)!` and `m!`
//! respectively, rather than by materializing the orderings.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::factorial;
use crate::triangles::{Kind, Params};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Cycles,
    Subsets,
    Lists,
}

impl Shape {
    pub fn for_kind(kind: Kind) -> Shape {
        match kind {
            Kind::FirstKind => Shape::Cycles,
            Kind::SecondKind => Shape::Subsets,
            Kind::Lah => Shape::Lists,
        }
    }

    fn block_weight(self, size: usize) -> Count {
        match self {
            Shape::Cycles => factorial(size as u64 - 1),
            Shape::Subsets => Count::from(1u32),
            Shape::Lists => factorial(size as u64),
        }
    }
}

/// Partitions of `{1..n}` into `k` parts of size at least `s`, with `1..r` in
/// pairwise distinct parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureSpec {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub s: u32,
    pub shape: Shape,
}

impl StructureSpec {
    pub fn new(n: u32, k: u32, r: u32, s: u32, shape: Shape) -> Self {
        StructureSpec { n, k, r, s, shape }
    }

    pub fn for_cell(p: &Params, n: u32, k: u32) -> Self {
        StructureSpec::new(n, k, p.r(), p.s(), Shape::for_kind(p.kind()))
    }
}

/// Largest ground set each shape may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub cycles_cap: u32,
    pub subsets_cap: u32,
    pub lists_cap: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cycles_cap: 11,
            subsets_cap: 11,
            lists_cap: 10,
        }
    }
}

impl OracleConfig {
    pub fn cap(&self, shape: Shape) -> u32 {
        match shape {
            Shape::Cycles => self.cycles_cap,
            Shape::Subsets => self.subsets_cap,
            Shape::Lists => self.lists_cap,
        }
    }

    fn admit(&self, spec: &StructureSpec) -> Result<()> {
        let cap = self.cap(spec.shape);
        if spec.n > cap {
            return Err(Error::CapExceeded { n: spec.n, cap });
        }
        Ok(())
    }
}

/// Walks every admissible partition; blocks hold 1-based elements in
/// increasing order. The callback returns `false` to stop early.
fn for_each_partition(spec: &StructureSpec, visit: &mut dyn FnMut(&[Vec<u32>]) -> bool) {
    if spec.r > spec.k || (spec.n as u64) < spec.s as u64 * spec.k as u64 {
        return;
    }
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(spec.k as usize);
    walk(spec, 0, &mut blocks, visit);
}

fn walk(
    spec: &StructureSpec,
    next: u32,
    blocks: &mut Vec<Vec<u32>>,
    visit: &mut dyn FnMut(&[Vec<u32>]) -> bool,
) -> bool {
    let remaining = (spec.n - next) as usize;
    let k = spec.k as usize;
    let s = spec.s as usize;
    // elements still needed to bring every block, open or not yet opened, to size s
    let deficit: usize = blocks
        .iter()
        .map(|b| s.saturating_sub(b.len()))
        .sum::<usize>()
        + (k - blocks.len()) * s;
    if deficit > remaining || k - blocks.len() > remaining {
        return true;
    }
    if remaining == 0 {
        return visit(blocks);
    }
    let element = next + 1;
    // the first r elements each open their own block
    if next >= spec.r {
        for b in 0..blocks.len() {
            blocks[b].push(element);
            let go_on = walk(spec, next + 1, blocks, visit);
            blocks[b].pop();
            if !go_on {
                return false;
            }
        }
    }
    if blocks.len() < k {
        blocks.push(vec![element]);
        let go_on = walk(spec, next + 1, blocks, visit);
        blocks.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Exact count of the structures described by `spec`.
pub fn enumerate_count(spec: &StructureSpec, config: &OracleConfig) -> Result<Count> {
    config.admit(spec)?;
    let mut total = Count::zero();
    for_each_partition(spec, &mut |blocks| {
        let weight: Count = blocks
            .iter()
            .map(|b| spec.shape.block_weight(b.len()))
            .product();
        total += weight;
        true
    });
    Ok(total)
}

/// Count of the cell `(n, k)` of the family `p`.
pub fn oracle_value(p: &Params, n: u32, k: u32, config: &OracleConfig) -> Result<Count> {
    enumerate_count(&StructureSpec::for_cell(p, n, k), config)
}

/// One concrete structure; each part is listed in its arrangement order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub shape: Shape,
    pub parts: Vec<Vec<u32>>,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.parts.iter().flatten().any(|&e| e >= 10);
        let (open, close) = match self.shape {
            Shape::Subsets => ("{", "}"),
            Shape::Cycles => ("(", ")"),
            Shape::Lists => ("[", "]"),
        };
        let body: Vec<String> = self
            .parts
            .iter()
            .map(|part| {
                let items: Vec<String> = part.iter().map(u32::to_string).collect();
                items.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{open}{}{close}", body.join("|"))
    }
}

/// Lexicographic successor of a permutation, in place; `false` at the last one.
fn next_permutation(items: &mut [u32]) -> bool {
    let Some(i) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..items.len())
        .rev()
        .find(|&j| items[j] > items[pivot])
        .expect("successor exists");
    items.swap(pivot, j);
    items[i..].reverse();
    true
}

/// All arrangements of one block in lexicographic order.
fn arrangements(shape: Shape, block: &[u32]) -> Vec<Vec<u32>> {
    match shape {
        Shape::Subsets => vec![block.to_vec()],
        Shape::Lists => {
            let mut current = block.to_vec();
            let mut out = vec![current.clone()];
            while next_permutation(&mut current) {
                out.push(current.clone());
            }
            out
        }
        Shape::Cycles => {
            // a cycle is written from its smallest element
            let (head, tail) = block.split_first().expect("blocks are nonempty");
            arrangements(Shape::Lists, tail)
                .into_iter()
                .map(|rest| std::iter::once(*head).chain(rest).collect())
                .collect()
        }
    }
}

/// The first `limit` structures in canonical order: partitions by restricted
/// growth string, then arrangements lexicographically, first part slowest.
pub fn enumerate_witnesses(
    spec: &StructureSpec,
    limit: usize,
    config: &OracleConfig,
) -> Result<Vec<Structure>> {
    config.admit(spec)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    for_each_partition(spec, &mut |blocks| {
        let choices: Vec<Vec<Vec<u32>>> =
            blocks.iter().map(|b| arrangements(spec.shape, b)).collect();
        let mut index = vec![0usize; choices.len()];
        loop {
            out.push(Structure {
                shape: spec.shape,
                parts: index
                    .iter()
                    .zip(&choices)
                    .map(|(&i, c)| c[i].clone())
                    .collect(),
            });
            if out.len() >= limit {
                return false;
            }
            let Some(pos) = (0..index.len())
                .rev()
                .find(|&p| index[p] + 1 < choices[p].len())
            else {
                return true;
            };
            index[pos] += 1;
            for later in &mut index[pos + 1..] {
                *later = 0;
            }
        }
    });
    Ok(out)
}
