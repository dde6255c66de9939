//! Graph families, function maps and small-graph enumeration.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functigraph::{FunctionMap, Signature};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    /// `K_{1,n-1}` with center 0.
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Path `0-1-2` with `t - 1` pendants on vertex 0.
    PendantGap {
        t: usize,
    },
    /// `K_n` minus the matching `(0,1), (2,3), ..., (2i-2, 2i-1)`.
    HGraph {
        n: usize,
        i: usize,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
            FamilySpec::Star { n } => write!(f, "star(n={n})"),
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::PendantGap { t } => write!(f, "pendant_gap(t={t})"),
            FamilySpec::HGraph { n, i } => write!(f, "h_graph(n={n},i={i})"),
        }
    }
}

pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidFamily(msg));
    match spec {
        FamilySpec::Complete { n } => {
            if n == 0 {
                return bad("complete needs n >= 1".into());
            }
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star { n } => {
            if n < 2 {
                return bad("star needs n >= 2".into());
            }
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Path { n } => {
            if n == 0 {
                return bad("path needs n >= 1".into());
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return bad("cycle needs n >= 3".into());
            }
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::PendantGap { t } => pendant_gap_graph(t),
        FamilySpec::HGraph { n, i } => {
            if n < 2 || i < 1 || i > n / 2 {
                return bad(format!(
                    "h_graph needs n >= 2 and 1 <= i <= n/2, got n={n}, i={i}"
                ));
            }
            if (n, i) == (2, 1) {
                return bad("h_graph(2,1) has no edges".into());
            }
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !(v == u + 1 && u % 2 == 0 && u < 2 * i))
                .collect();
            Graph::from_edges(n, &edges)
        }
    }
}

/// Path `0-1-2` with pendant vertices `3..=t+1` attached to vertex 0.
pub fn pendant_gap_graph(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidFamily(format!(
            "pendant_gap needs t >= 2, got {t}"
        )));
    }
    let mut edges = vec![(0, 1), (1, 2)];
    edges.extend((3..t + 2).map(|p| (0, p)));
    Graph::from_edges(t + 2, &edges)
}

/// Which part of `H_i` a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HVertexKind {
    /// Degree `n - 1`.
    Saturated,
    /// Endpoint of a removed matching edge.
    TwinPair,
}

impl HVertexKind {
    /// Kind of vertex `v` in `H_i`: the first `2i` vertices are the matched pairs.
    pub fn of(i: usize, v: usize) -> Self {
        if v < 2 * i {
            HVertexKind::TwinPair
        } else {
            HVertexKind::Saturated
        }
    }
}

impl fmt::Display for HVertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HVertexKind::Saturated => "saturated",
            HVertexKind::TwinPair => "twin-pair",
        })
    }
}

/// Ways of describing a function map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSpec {
    Constant(usize),
    Identity,
    Permutation(Vec<usize>),
    /// Contiguous blocks: the first `s_1` vertices map to 0, the next `s_2` to 1, ...
    Signature(Vec<usize>),
}

impl FromStr for MapSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let list = |body: &str| -> Result<Vec<usize>> {
            body.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad map entry {x:?}: {e}")))
                })
                .collect()
        };
        if s == "identity" {
            return Ok(MapSpec::Identity);
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("map {s:?} is not kind:params")))?;
        match kind {
            "constant" => body
                .trim()
                .parse()
                .map(MapSpec::Constant)
                .map_err(|e| Error::Parse(format!("bad constant target {body:?}: {e}"))),
            "perm" | "permutation" => list(body).map(MapSpec::Permutation),
            "signature" => list(body).map(MapSpec::Signature),
            _ => Err(Error::Parse(format!("unknown map kind {kind:?}"))),
        }
    }
}

pub fn make_map(n: usize, spec: &MapSpec) -> Result<FunctionMap> {
    match spec {
        MapSpec::Constant(target) => FunctionMap::constant(n, *target),
        MapSpec::Identity => FunctionMap::identity(n),
        MapSpec::Permutation(perm) => {
            if perm.len() != n {
                return Err(Error::InvalidPermutation(format!(
                    "length {} for order {n}",
                    perm.len()
                )));
            }
            let distinct: BTreeSet<_> = perm.iter().collect();
            if distinct.len() != n || perm.iter().any(|&p| p >= n) {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
            FunctionMap::new(perm.clone())
        }
        MapSpec::Signature(parts) => {
            let sig = Signature::of_order(n, parts.clone())?;
            Ok(signature_map(&sig))
        }
    }
}

/// Canonical map with the given preimage sizes: block `i` maps to vertex `i`.
pub fn signature_map(sig: &Signature) -> FunctionMap {
    let targets = sig
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(image, &size)| std::iter::repeat(image).take(size))
        .collect();
    FunctionMap::new(targets).expect("parts sum to the order")
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1, ..., 1)` last.
pub fn signatures(n: usize) -> Vec<Signature> {
    fn rec(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Signature>) {
        if rest == 0 {
            out.push(Signature::new(prefix.clone()).expect("non-increasing"));
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every connected labeled graph on `n` vertices. Practical for `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "labeled enumeration is limited to n <= 8");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("valid edge subset");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
/// Canonical forms are minimized over all `n!` relabelings, so keep `n <= 7`.
pub fn connected_graph_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in connected_graphs(n) {
        let key = perms
            .iter()
            .map(|p| edge_code(&g, p))
            .min()
            .expect("at least one permutation");
        if seen.insert(key) {
            out.push(g);
        }
    }
    out
}

fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1u64 << (a * n + b);
    }
    code
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Every map `0..n -> 0..n`, `n^n` of them.
pub fn all_maps(n: usize) -> impl Iterator<Item = FunctionMap> {
    let total = n.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut targets = vec![0; n];
        for t in targets.iter_mut() {
            *t = code % n;
            code /= n;
        }
        FunctionMap::new(targets).expect("targets in range")
    })
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Rejection-samples [`random_graph`] until connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(p > 0.0 || n == 1, "p = 0 never yields a connected graph");
    loop {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A uniformly relabeled map with the given preimage sizes.
pub fn random_map_with_signature<R: Rng + ?Sized>(sig: &Signature, rng: &mut R) -> FunctionMap {
    let n = sig.order();
    let domain = random_permutation(n, rng);
    let image = random_permutation(n, rng);
    let canonical = signature_map(sig);
    let mut targets = vec![0; n];
    for u in 0..n {
        targets[domain[u]] = image[canonical.target(u)];
    }
    FunctionMap::new(targets).expect("targets in range")
}
