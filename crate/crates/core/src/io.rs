//! Graph JSON: `{"n":3,"edges":[[0,1,1],[1,2,-1]]}`.
//!
//! Edges are written in stored order, so a graph read from sorted input is
//! written back byte for byte.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Sign, SignedGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl From<&SignedGraph> for GraphJson {
    fn from(g: &SignedGraph) -> Self {
        GraphJson { n: g.order(), edges: g.edges().iter().map(|e| (e.u, e.v, e.sign.value())).collect() }
    }
}

pub fn from_json_str(s: &str) -> Result<SignedGraph> {
    let raw: GraphJson = serde_json::from_str(s)?;
    SignedGraph::from_triples(raw.n, &raw.edges)
}

pub fn read_graph<R: Read>(reader: R) -> Result<SignedGraph> {
    let raw: GraphJson = serde_json::from_reader(reader)?;
    SignedGraph::from_triples(raw.n, &raw.edges)
}

/// Compact JSON, edges in stored order.
pub fn to_json_string(g: &SignedGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON always serialises")
}

/// Compact JSON with edges sorted by `(u, v)`.
pub fn to_canonical_json(g: &SignedGraph) -> String {
    to_json_string(&g.canonical())
}

pub fn write_graph<W: Write>(mut writer: W, g: &SignedGraph) -> Result<()> {
    writer.write_all(to_json_string(g).as_bytes()).map_err(serde_json::Error::io)?;
    Ok(())
}

/// `(u, v, sign)` triples as plain integers.
pub fn triples(g: &SignedGraph) -> Vec<(usize, usize, i64)> {
    g.edges().iter().map(|e| (e.u, e.v, Sign::value(e.sign))).collect()
}
