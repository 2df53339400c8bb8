//! Balance by spanning-tree switching.
//!
//! Each component is explored breadth-first from its lowest vertex. The root
//! gets switch value `+1` and every tree child inherits `s(parent)·σ(edge)`,
//! which makes every tree edge positive after switching. The component is
//! balanced exactly when every remaining edge is positive under the same
//! switch. The same traversal 2-colours the underlying graph to count
//! bipartite components.

use std::collections::VecDeque;

use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    pub balanced: bool,
    pub bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub components: Vec<Component>,
    /// Switching certificate; `None` on vertices of unbalanced components.
    pub switch: Vec<Option<Sign>>,
}

impl BalanceReport {
    /// Number of balanced components, `b(Σ)`.
    pub fn b(&self) -> usize {
        self.components.iter().filter(|c| c.balanced).count()
    }

    /// Number of components, `c(G)`.
    pub fn c(&self) -> usize {
        self.components.len()
    }

    /// Number of bipartite components, `c_b(G)`.
    pub fn c_b(&self) -> usize {
        self.components.iter().filter(|c| c.bipartite).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.components.iter().all(|c| c.balanced)
    }

    /// A full switching vector making the graph all-positive, when balanced.
    pub fn certificate(&self) -> Option<Vec<Sign>> {
        self.switch.iter().copied().collect()
    }
}

pub fn balance_report(g: &SignedGraph) -> BalanceReport {
    let n = g.order();
    let adj = g.neighbors();
    let mut tentative: Vec<Option<Sign>> = vec![None; n];
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut components = Vec::new();

    for root in 0..n {
        if tentative[root].is_some() {
            continue;
        }
        tentative[root] = Some(Sign::Positive);
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        let mut vertices = Vec::new();
        let mut balanced = true;
        let mut bipartite = true;

        while let Some(x) = queue.pop_front() {
            vertices.push(x);
            let sx = tentative[x].expect("visited");
            let cx = color[x].expect("visited");
            for &(y, sigma) in &adj[x] {
                match tentative[y] {
                    None => {
                        tentative[y] = Some(sx * sigma);
                        color[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(sy) => {
                        if sx * sigma * sy != Sign::Positive {
                            balanced = false;
                        }
                        if color[y] == Some(cx) {
                            bipartite = false;
                        }
                    }
                }
            }
        }
        vertices.sort_unstable();
        components.push(Component { vertices, balanced, bipartite });
    }

    let mut switch = tentative;
    for comp in components.iter().filter(|c| !c.balanced) {
        for &v in &comp.vertices {
            switch[v] = None;
        }
    }
    BalanceReport { components, switch }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_balanced() {
        let star = SignedGraph::from_triples(5, &[(0, 1, -1), (0, 2, 1), (0, 3, -1), (3, 4, -1)]).unwrap();
        let r = balance_report(&star);
        assert!(r.is_balanced());
        assert_eq!((r.b(), r.c(), r.c_b()), (1, 1, 1));
    }

    #[test]
    fn one_negative_edge_on_square_is_unbalanced() {
        let c4 = SignedGraph::from_triples(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        let r = balance_report(&c4);
        assert!(!r.is_balanced());
        assert_eq!(r.b(), 0);
        assert_eq!(r.c_b(), 1);
        assert!(r.certificate().is_none());
        assert!(r.switch.iter().all(Option::is_none));
    }

    #[test]
    fn certificate_switches_to_all_positive() {
        let g = SignedGraph::from_triples(4, &[(0, 1, -1), (1, 2, -1), (0, 2, 1), (2, 3, -1)]).unwrap();
        let r = balance_report(&g);
        assert!(r.is_balanced());
        let s = r.certificate().unwrap();
        assert!(g.switch(&s).unwrap().is_all_positive());
    }

    #[test]
    fn mixed_components() {
        // balanced path, unbalanced triangle, isolated vertex
        let g = SignedGraph::from_triples(
            6,
            &[(0, 1, -1), (2, 3, -1), (3, 4, 1), (2, 4, 1)],
        )
        .unwrap();
        let r = balance_report(&g);
        assert_eq!(r.c(), 3);
        assert_eq!(r.b(), 2);
        assert_eq!(r.c_b(), 2);
        assert_eq!(r.components[1].vertices, vec![2, 3, 4]);
        assert!(r.switch[0].is_some() && r.switch[5].is_some());
        assert!(r.switch[2].is_none());
    }

    #[test]
    fn null_graph() {
        let r = balance_report(&SignedGraph::empty(0));
        assert_eq!((r.b(), r.c(), r.c_b()), (0, 0, 0));
        assert!(r.is_balanced());
        assert_eq!(r.certificate(), Some(vec![]));
    }
}
