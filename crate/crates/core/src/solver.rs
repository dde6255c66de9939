//! Locating-dominating sets and the location-domination number.
//!
//! A set `L` is locating-dominating when every vertex outside `L` has a
//! nonempty trace `N(u) ∩ L` and no two outside vertices share a trace.
//! The property is closed under supersets, so the minimum is found by
//! scanning cardinalities upward.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, TwinPartition, VertexSet};

/// Largest order [`lambda_oracle`] accepts.
pub const ORACLE_GUARD: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Seed the search with the forced twin set and start at the twin bound.
    pub use_twin_pruning: bool,
    /// Rescan the optimal cardinality sequentially for the lexicographically
    /// least witness.
    pub deterministic_witness: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            use_twin_pruning: true,
            deterministic_witness: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub sets_tested: u64,
    /// Cardinalities below the starting lower bound, never enumerated.
    pub pruned_cardinalities_skipped: usize,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub lambda: usize,
    pub witness: VertexSet,
    pub stats: SearchStats,
}

/// `N(u) ∩ L` for a vertex `u` outside `L`.
pub fn trace(g: &Graph, set: &VertexSet, u: usize) -> Result<VertexSet> {
    let nb = g.neighborhood(u, false)?;
    if set.contains(u) {
        return Err(Error::VertexInSet(u));
    }
    Ok(nb.intersection(set))
}

pub fn is_locating_dominating(g: &Graph, set: &VertexSet) -> bool {
    let mut seen = Vec::with_capacity(g.order());
    locates(g, set.bits(), &mut seen)
}

/// Hot-path check on raw bits. `seen` is scratch space for traces.
#[inline]
fn locates(g: &Graph, set: u128, seen: &mut Vec<u128>) -> bool {
    seen.clear();
    let outside = VertexSet::from_bits(g.order(), !set);
    for u in outside.iter() {
        let t = g.neighbor_bits(u) & set;
        if t == 0 || seen.contains(&t) {
            return false;
        }
        seen.push(t);
    }
    true
}

/// Least `λ` with `order - λ <= 2^λ - 1`: outside vertices need distinct
/// nonempty subsets of the set as traces.
pub fn info_lower_bound(order: usize) -> usize {
    (0..=order)
        .find(|&l| {
            let subsets = if l >= 64 { u128::MAX } else { (1u128 << l) - 1 };
            ((order - l) as u128) <= subsets
        })
        .unwrap_or(order)
}

/// Every class of `m >= 2` twins contributes `m - 1` forced members.
pub fn twin_lower_bound(tp: &TwinPartition) -> usize {
    tp.nontrivial().map(|c| c.members.len() - 1).sum()
}

/// Exact location-domination number by ascending-cardinality search.
///
/// With twin pruning on, only supersets of the forced twin set are examined.
/// Swapping two twins is an automorphism, so any minimum set can be moved onto
/// one that contains the lowest `m - 1` members of each twin class.
pub fn lambda_exact(g: &Graph, opts: SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.order();
    if n == 0 {
        return Err(Error::OrderOutOfRange(0));
    }

    let (forced, first) = if opts.use_twin_pruning {
        let tp = g.twin_partition();
        let forced = tp.forced_set(n);
        let first = info_lower_bound(n).max(twin_lower_bound(&tp));
        (forced, first)
    } else {
        (VertexSet::empty(n), 0)
    };
    let candidates: Vec<usize> = forced.complement().iter().collect();
    let tested = AtomicU64::new(0);

    for size in first..=n {
        let free = size - forced.len();
        if let Some(found) = search_level(g, forced.bits(), &candidates, free, &tested, true) {
            let witness = if opts.deterministic_witness {
                search_level(g, forced.bits(), &candidates, free, &tested, false)
                    .expect("rescan must find a witness at the optimal size")
            } else {
                found
            };
            return Ok(SolveResult {
                lambda: size,
                witness: VertexSet::from_bits(n, witness),
                stats: SearchStats {
                    sets_tested: tested.load(Ordering::Relaxed),
                    pruned_cardinalities_skipped: first,
                    elapsed: start.elapsed(),
                },
            });
        }
    }
    unreachable!("the full vertex set is always locating-dominating")
}

/// Tests every `forced ∪ C` with `C` a `free`-subset of `candidates`.
/// The sequential path visits subsets in lexicographic order.
fn search_level(
    g: &Graph,
    forced: u128,
    candidates: &[usize],
    free: usize,
    tested: &AtomicU64,
    parallel: bool,
) -> Option<u128> {
    let m = candidates.len();
    if free > m {
        return None;
    }
    if free == 0 {
        tested.fetch_add(1, Ordering::Relaxed);
        let mut seen = Vec::new();
        return locates(g, forced, &mut seen).then_some(forced);
    }
    let branch = |head: usize| -> Option<u128> {
        let mut seen = Vec::with_capacity(g.order());
        let mut count = 0u64;
        let base = forced | (1u128 << candidates[head]);
        let hit = scan_combinations(&candidates[head + 1..], free - 1, |bits| {
            count += 1;
            locates(g, base | bits, &mut seen)
        })
        .map(|bits| base | bits);
        tested.fetch_add(count, Ordering::Relaxed);
        hit
    };
    let heads = 0..=(m - free);
    if parallel {
        heads.into_par_iter().find_map_any(branch)
    } else {
        heads.into_iter().find_map(branch)
    }
}

/// Visits `r`-subsets of `pool` in lexicographic order until `accept` holds.
fn scan_combinations<F: FnMut(u128) -> bool>(
    pool: &[usize],
    r: usize,
    mut accept: F,
) -> Option<u128> {
    let m = pool.len();
    if r > m {
        return None;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let bits = idx.iter().fold(0u128, |acc, &i| acc | (1u128 << pool[i]));
        if accept(bits) {
            return Some(bits);
        }
        // advance to the next combination
        let mut i = r;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < m - r + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Unpruned reference: every subset, ascending cardinality, one thread.
///
/// Shares nothing with [`lambda_exact`] beyond reading neighborhoods.
pub fn lambda_oracle(g: &Graph) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.order();
    if n > ORACLE_GUARD {
        return Err(Error::OracleGuard {
            order: n,
            guard: ORACLE_GUARD,
        });
    }
    let mut adj = vec![0u32; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for v in g.neighborhood(u, false)?.to_vec() {
            *row |= 1 << v;
        }
    }
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    let mut tested = 0u64;
    for size in 0..=n {
        let mut subset: u32 = if size == 0 { 0 } else { all >> (n - size) };
        loop {
            tested += 1;
            if oracle_accepts(&adj, subset) {
                return Ok(SolveResult {
                    lambda: size,
                    witness: VertexSet::from_bits(n, subset as u128),
                    stats: SearchStats {
                        sets_tested: tested,
                        pruned_cardinalities_skipped: 0,
                        elapsed: start.elapsed(),
                    },
                });
            }
            if size == 0 || size == n {
                break;
            }
            // Gosper's hack: next integer with the same popcount
            let c = subset & subset.wrapping_neg();
            let r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
            if subset > all {
                break;
            }
        }
    }
    unreachable!("the full vertex set is always locating-dominating")
}

fn oracle_accepts(adj: &[u32], subset: u32) -> bool {
    let mut traces: Vec<u32> = (0..adj.len())
        .filter(|&u| subset >> u & 1 == 0)
        .map(|u| adj[u] & subset)
        .collect();
    if traces.contains(&0) {
        return false;
    }
    let before = traces.len();
    traces.sort_unstable();
    traces.dedup();
    traces.len() == before
}
