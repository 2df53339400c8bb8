//! Signed line graph.
//!
//! `Λ(Σ)` has one vertex per edge of `Σ` (in edge order) and adjacency matrix
//! `2I − HᵀH`, where `H` is the incidence matrix. Two edges meeting at `v` are
//! joined with sign `−η_{v,e}·η_{v,f}`. Cycles keep their sign, and any three
//! edges at a common vertex become a negative triangle.

use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphResult {
    pub graph: SignedGraph,
    /// For each line-graph edge (same order as `graph.edges()`), the vertex of
    /// the input graph shared by the two edges it joins.
    pub edge_origin: Vec<usize>,
}

pub fn line_graph(g: &SignedGraph) -> LineGraphResult {
    let h = g.incidence();
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (k, e) in g.edges().iter().enumerate() {
        at_vertex[e.u].push(k);
        at_vertex[e.v].push(k);
    }

    let mut joined: Vec<(usize, usize, Sign, usize)> = Vec::new();
    for (v, incident) in at_vertex.iter().enumerate() {
        for (a, &e) in incident.iter().enumerate() {
            for &f in &incident[a + 1..] {
                let sign = Sign::from_value(-h.get(v, e) * h.get(v, f)).expect("incidence entries are ±1");
                joined.push((e.min(f), e.max(f), sign, v));
            }
        }
    }
    joined.sort_unstable();
    // Two distinct edges of a simple graph share at most one endpoint.
    debug_assert!(joined.windows(2).all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1)));

    let edge_origin = joined.iter().map(|j| j.3).collect();
    let graph = SignedGraph::new(g.size(), joined.into_iter().map(|(e, f, s, _)| (e, f, s)))
        .expect("simple graphs have simple line graphs");
    LineGraphResult { graph, edge_origin }
}
