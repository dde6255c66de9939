//! Simple undirected graphs on dense vertex indices, fixed-width vertex sets
//! and the twin partition.
//!
//! Vertices are `0..n` with `n <= MAX_ORDER`. Adjacency is one 128-bit word
//! per vertex, so every set operation the solver needs is a handful of
//! machine instructions.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported graph order (one bit per vertex in a `u128`).
pub const MAX_ORDER: usize = 128;

#[inline]
fn full_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// A subset of the vertices `0..universe` of a fixed-order graph.
///
/// Ordering is lexicographic on the sorted member lists, so `{0, 5} < {1}`
/// and `{0} < {0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    bits: u128,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= MAX_ORDER);
        Self { universe, bits: 0 }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            universe,
            bits: full_mask(universe),
        }
    }

    /// Builds a set from raw bits; bits at or above `universe` are dropped.
    pub fn from_bits(universe: usize, bits: u128) -> Self {
        Self {
            universe,
            bits: bits & full_mask(universe),
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(
        universe: usize,
        members: I,
    ) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.bits |= 1u128 << v;
        }
        Ok(set)
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && (self.bits >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.bits |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.bits &= !(1u128 << v);
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_bits(self.universe, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_bits(self.universe, self.bits & other.bits)
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_bits(self.universe, self.bits & !other.bits)
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(self.universe, !self.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
pub struct Members {
    bits: u128,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u128>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops and repeated pairs are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut adj = vec![0u128; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if (adj[u] >> v) & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1u128 << v;
            adj[v] |= 1u128 << u;
        }
        let g = Self { adj };
        debug_assert!(g.check_invariants().is_ok());
        Ok(g)
    }

    /// Builds a graph from adjacency words, validating loops, symmetry and range.
    pub fn from_adjacency(adj: Vec<u128>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let g = Self { adj };
        g.check_invariants()?;
        Ok(g)
    }

    /// Full scan of the structural invariants.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        let mask = full_mask(n);
        for (u, &row) in self.adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            if (row >> u) & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in VertexSet::from_bits(n, row).iter() {
                if (self.adj[v] >> u) & 1 == 0 {
                    return Err(Error::Parse(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Open neighborhood as raw bits. Panics on an out-of-range vertex.
    #[inline]
    pub fn neighbor_bits(&self, u: usize) -> u128 {
        self.adj[u]
    }

    pub fn neighborhood(&self, u: usize, closed: bool) -> Result<VertexSet> {
        self.check_vertex(u)?;
        let mut bits = self.adj[u];
        if closed {
            bits |= 1u128 << u;
        }
        Ok(VertexSet::from_bits(self.order(), bits))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && (self.adj[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            let higher = self.adj[u] & !full_mask(u + 1);
            out.extend(VertexSet::from_bits(n, higher).iter().map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen: u128 = 1;
        let mut frontier: u128 = 1;
        while frontier != 0 {
            let mut next = 0u128;
            for u in VertexSet::from_bits(n, frontier).iter() {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(n)
    }

    /// Image of the graph under the vertex relabeling `u -> perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u128;
        for &p in perm {
            if p >= n || (seen >> p) & 1 == 1 {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
            seen |= 1u128 << p;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(n, &edges)
    }

    pub fn twin_partition(&self) -> TwinPartition {
        TwinPartition::of(self)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    /// Members share the closed neighborhood `N[u]`.
    AdjacentTwins,
    /// Members share the open neighborhood `N(u)`.
    NonAdjacentTwins,
    Singleton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub members: VertexSet,
    pub kind: TwinKind,
}

/// Partition of the vertices into maximal twin classes, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
}

impl TwinPartition {
    fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut class_of: Vec<Option<usize>> = vec![None; n];
        let mut classes: Vec<TwinClass> = Vec::new();

        // No vertex can be an adjacent twin of one vertex and a non-adjacent
        // twin of another, so the two groupings never compete for a vertex.
        let mut by_closed: HashMap<u128, u128> = HashMap::new();
        for u in 0..n {
            *by_closed.entry(g.adj[u] | (1u128 << u)).or_default() |= 1u128 << u;
        }
        let mut by_open: HashMap<u128, u128> = HashMap::new();
        for u in 0..n {
            *by_open.entry(g.adj[u]).or_default() |= 1u128 << u;
        }

        for u in 0..n {
            if class_of[u].is_some() {
                continue;
            }
            let closed = by_closed[&(g.adj[u] | (1u128 << u))];
            let open = by_open[&g.adj[u]];
            let (bits, kind) = if closed.count_ones() >= 2 {
                (closed, TwinKind::AdjacentTwins)
            } else if open.count_ones() >= 2 {
                (open, TwinKind::NonAdjacentTwins)
            } else {
                (1u128 << u, TwinKind::Singleton)
            };
            let members = VertexSet::from_bits(n, bits);
            for v in members.iter() {
                debug_assert!(class_of[v].is_none());
                class_of[v] = Some(classes.len());
            }
            classes.push(TwinClass { members, kind });
        }
        Self { classes }
    }

    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.members.len() >= 2)
    }

    pub fn class_of(&self, v: usize) -> Option<&TwinClass> {
        self.classes.iter().find(|c| c.members.contains(v))
    }

    /// The lowest-indexed `m - 1` members of every class of size `m >= 2`.
    pub fn forced_set(&self, universe: usize) -> VertexSet {
        let mut bits = 0u128;
        for class in self.nontrivial() {
            let top = 1u128 << (127 - class.members.bits().leading_zeros());
            bits |= class.members.bits() & !top;
        }
        VertexSet::from_bits(universe, bits)
    }
}
