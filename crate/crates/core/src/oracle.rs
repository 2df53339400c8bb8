//! Brute-force reference implementations.
//!
//! Nothing here shares code with the production balance or spectral paths:
//! components come from a union-find, balance from explicit cycle enumeration
//! or exhaustive switching, and rank from exact integer elimination.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::matrix::Matrix;

pub const CYCLE_ENUMERATION_CAP: usize = 10;
pub const SWITCHING_CAP: usize = 16;

/// Components and their balance as determined by an oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBalance {
    /// `(sorted vertices, balanced)` per component, ordered by least vertex.
    pub components: Vec<(Vec<usize>, bool)>,
}

impl OracleBalance {
    pub fn b(&self) -> usize {
        self.components.iter().filter(|c| c.1).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.components.iter().all(|c| c.1)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

fn components(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

fn sign_matrix(g: &SignedGraph) -> Vec<Vec<i8>> {
    let mut s = vec![vec![0i8; g.order()]; g.order()];
    for e in g.edges() {
        s[e.u][e.v] = e.sign.value() as i8;
        s[e.v][e.u] = e.sign.value() as i8;
    }
    s
}

/// Balance by enumerating every simple cycle: a component is balanced iff
/// every cycle in it has an even number of negative edges.
pub fn balance_by_cycles(g: &SignedGraph) -> Result<OracleBalance> {
    if g.order() > CYCLE_ENUMERATION_CAP {
        return Err(Error::SizeCap { n: g.order(), cap: CYCLE_ENUMERATION_CAP });
    }
    let sign = sign_matrix(g);
    let n = g.order();

    // negative_cycle_at[s]: some cycle whose least vertex is s is negative
    let mut negative_cycle_at = vec![false; n];
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        negative_cycle_at[start] = dfs_negative_cycle(&sign, start, start, 1, 1, &mut on_path);
    }

    let comps = components(g)
        .into_iter()
        .map(|vs| {
            let balanced = !vs.iter().any(|&v| negative_cycle_at[v]);
            (vs, balanced)
        })
        .collect();
    Ok(OracleBalance { components: comps })
}

// Extends simple paths from `start` through vertices larger than `start`;
// a path of length >= 2 whose end is adjacent to `start` closes a cycle.
fn dfs_negative_cycle(
    sign: &[Vec<i8>],
    start: usize,
    at: usize,
    path_sign: i8,
    path_len: usize,
    on_path: &mut [bool],
) -> bool {
    let n = sign.len();
    for next in 0..n {
        let s = sign[at][next];
        if s == 0 {
            continue;
        }
        if next == start && path_len >= 3 && path_sign * s < 0 {
            return true;
        }
        if next > start && !on_path[next] {
            on_path[next] = true;
            let found = dfs_negative_cycle(sign, start, next, path_sign * s, path_len + 1, on_path);
            on_path[next] = false;
            if found {
                return true;
            }
        }
    }
    false
}

/// Number of components that some switching makes all-positive, found by
/// trying every switching of each component with its least vertex fixed.
pub fn balanced_components_by_switching(g: &SignedGraph) -> Result<usize> {
    if g.order() > SWITCHING_CAP {
        return Err(Error::SizeCap { n: g.order(), cap: SWITCHING_CAP });
    }
    let mut count = 0;
    for comp in components(g) {
        let local = |v: usize| comp.binary_search(&v).ok();
        let inner: Vec<_> = g
            .edges()
            .iter()
            .filter_map(|e| Some((local(e.u)?, local(e.v)?, e.sign)))
            .collect();
        let k = comp.len();
        let found = (0u32..(1u32 << (k - 1))).any(|mask| {
            // bit i of mask (i >= 1) negates local vertex i
            let s = |i: usize| if i > 0 && mask >> (i - 1) & 1 == 1 { Sign::Negative } else { Sign::Positive };
            inner.iter().all(|&(a, b, sigma)| s(a) * sigma * s(b) == Sign::Positive)
        });
        if found {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether the whole graph switches to all-positive.
pub fn balance_by_switching(g: &SignedGraph) -> Result<bool> {
    let b = balanced_components_by_switching(g)?;
    Ok(b == components(g).len())
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &Matrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != BigInt::ZERO) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::ZERO;
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
