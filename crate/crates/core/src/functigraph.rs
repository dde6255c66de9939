//! Functigraphs: two copies of a base graph joined by the edges `u -> f(u)`.
//!
//! In a functigraph of a base graph of order `n`, indices `0..n` are the first
//! copy (the domain of the map) and `n..2n` the second copy (the codomain).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// The map from first-copy vertices to second-copy vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FunctionMap {
    targets: Vec<usize>,
}

impl FunctionMap {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        let n = targets.len();
        if n == 0 || 2 * n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        for (position, &target) in targets.iter().enumerate() {
            if target >= n {
                return Err(Error::TargetOutOfRange {
                    position,
                    target,
                    order: n,
                });
            }
        }
        Ok(Self { targets })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    pub fn constant(n: usize, target: usize) -> Result<Self> {
        Self::new(vec![target; n])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn target(&self, u: usize) -> usize {
        self.targets[u]
    }

    /// `|f^{-1}(v)|` for every `v` in `0..n`.
    pub fn preimage_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.order()];
        for &t in &self.targets {
            sizes[t] += 1;
        }
        sizes
    }

    /// Size of the image `f(V)`.
    pub fn image_size(&self) -> usize {
        self.preimage_sizes().iter().filter(|&&s| s > 0).count()
    }

    pub fn signature(&self) -> Signature {
        let mut parts: Vec<usize> = self
            .preimage_sizes()
            .into_iter()
            .filter(|&s| s > 0)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Signature { parts }
    }

    /// Cross edges `(u, n + v)` whose image vertex `v` has `u` as its only preimage.
    pub fn functi_matchings(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let sizes = self.preimage_sizes();
        self.targets
            .iter()
            .enumerate()
            .filter(|&(_, &v)| sizes[v] == 1)
            .map(|(u, &v)| (u, n + v))
            .collect()
    }

    pub fn classify(&self) -> FunctionClass {
        FunctionClass::of(&self.signature())
    }
}

impl TryFrom<Vec<usize>> for FunctionMap {
    type Error = Error;

    fn try_from(targets: Vec<usize>) -> Result<Self> {
        Self::new(targets)
    }
}

impl From<FunctionMap> for Vec<usize> {
    fn from(map: FunctionMap) -> Self {
        map.targets
    }
}

/// Preimage sizes over the image, non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    parts: Vec<usize>,
}

impl Signature {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSignature("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSignature(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSignature(format!(
                "parts increase in {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Like [`Signature::new`], also requiring the parts to sum to `n`.
    pub fn of_order(n: usize, parts: Vec<usize>) -> Result<Self> {
        let sig = Self::new(parts)?;
        if sig.order() != n {
            return Err(Error::InvalidSignature(format!(
                "parts {:?} sum to {} instead of {n}",
                sig.parts,
                sig.order()
            )));
        }
        Ok(sig)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. the image size.
    pub fn image_size(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts equal to one.
    pub fn matchings(&self) -> usize {
        self.parts.iter().filter(|&&s| s == 1).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionKind {
    Constant,
    Bijective,
    MidNoMatching,
    MidWithMatching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctionClass {
    pub kind: FunctionKind,
    /// Image size.
    pub k: usize,
    /// Number of functi matchings.
    pub p: usize,
}

impl FunctionClass {
    pub fn of(sig: &Signature) -> Self {
        let n = sig.order();
        let k = sig.image_size();
        let p = sig.matchings();
        // A one-vertex base is both constant and bijective; call it constant.
        let kind = if k == 1 {
            FunctionKind::Constant
        } else if k == n {
            FunctionKind::Bijective
        } else if p == 0 {
            FunctionKind::MidNoMatching
        } else {
            FunctionKind::MidWithMatching
        };
        Self { kind, k, p }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functigraph {
    graph: Graph,
    base: Graph,
    map: FunctionMap,
}

impl Functigraph {
    pub fn build(base: &Graph, map: &FunctionMap) -> Result<Self> {
        let n = base.order();
        if map.order() != n {
            return Err(Error::OrderMismatch {
                map: map.order(),
                graph: n,
            });
        }
        if !base.is_connected() {
            return Err(Error::Disconnected);
        }
        if 2 * n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(2 * n));
        }
        let mut adj = vec![0u128; 2 * n];
        for u in 0..n {
            let row = base.neighbor_bits(u);
            adj[u] = row;
            adj[n + u] = row << n;
        }
        for (u, &v) in map.targets().iter().enumerate() {
            adj[u] |= 1u128 << (n + v);
            adj[n + v] |= 1u128 << u;
        }
        let graph = Graph::from_adjacency(adj)?;
        Ok(Self {
            graph,
            base: base.clone(),
            map: map.clone(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn base_order(&self) -> usize {
        self.base.order()
    }

    pub fn map(&self) -> &FunctionMap {
        &self.map
    }

    /// Index of the second-copy vertex `v`.
    pub fn second(&self, v: usize) -> usize {
        self.base_order() + v
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}
