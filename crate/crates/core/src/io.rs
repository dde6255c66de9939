//! Graph JSON, functigraph JSON and plain edge lists.
//!
//! ```text
//! {"n": 3, "edges": [[0, 1], [1, 2]]}
//! {"base": {"n": 3, "edges": [[0, 1], [1, 2]]}, "map": [0, 1, 2]}
//! ```

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::functigraph::FunctionMap;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        for &[u, v] in &self.edges {
            if u >= v && u < self.n && v < self.n {
                return Err(Error::UnorderedEdge(u, v));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctigraphJson {
    pub base: GraphJson,
    pub map: Vec<usize>,
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Graph(Graph),
    Functigraph { base: Graph, map: FunctionMap },
}

/// Parses either schema; the presence of a `"map"` key selects functigraph.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let is_functigraph = value.as_object().is_some_and(|o| o.contains_key("map"));
    if is_functigraph {
        let doc: FunctigraphJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let base = doc.base.to_graph()?;
        let map = FunctionMap::new(doc.map)?;
        Ok(Document::Functigraph { base, map })
    } else {
        let doc: GraphJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Document::Graph(doc.to_graph()?))
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("plain data serializes")
}

pub fn functigraph_to_json(base: &Graph, map: &FunctionMap) -> String {
    let doc = FunctigraphJson {
        base: GraphJson::from_graph(base),
        map: map.targets().to_vec(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// One `u v` pair per line; `#` starts a comment. The order is one more
/// than the largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("line {}: expected `u v`, got {raw:?}", lineno + 1));
        if fields.len() != 2 {
            return Err(bad());
        }
        let u: usize = fields[0].parse().map_err(|_| bad())?;
        let v: usize = fields[1].parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, &edges)
}
