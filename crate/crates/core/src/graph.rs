//! The signed graph model and its matrices.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::matrix::{Matrix, SymMatrix};

/// An edge sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Positive, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A signed edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint of the edge other than `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// A simple, loop-free signed graph on vertices `0..n`.
///
/// Edges keep the order in which they were supplied; that order indexes the
/// columns of the incidence matrix and the vertices of the line graph.
/// Endpoints are stored with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// Validates and stores the edges; `(v, u)` is normalised to `(u, v)`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, sign) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            out.push(Edge { u, v, sign });
        }
        Ok(Self { n, edges: out })
    }

    /// Convenience constructor from `(u, v, ±1)` triples.
    pub fn from_triples(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let signed = edges
            .iter()
            .map(|&(u, v, s)| Sign::from_value(s).map(|s| (u, v, s)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, signed)
    }

    /// All-positive graph on the given unsigned edges.
    pub fn all_positive(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, Sign::Positive)))
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }

    pub fn is_all_negative(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Negative)
    }

    /// Same graph with edges sorted by `(u, v)`.
    pub fn canonical(&self) -> SignedGraph {
        let mut edges = self.edges.clone();
        edges.sort();
        SignedGraph { n: self.n, edges }
    }

    /// Sign of the edge `uv`, if present.
    pub fn sign_between(&self, a: usize, b: usize) -> Option<Sign> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges.iter().find(|e| e.u == u && e.v == v).map(|e| e.sign)
    }

    /// Unsigned vertex degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    /// `2|E| / |V|`, or 0 for the empty vertex set.
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.n as f64
        }
    }

    /// `Some(k)` when every vertex has degree `k`. The null graph is 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&k) => d.iter().all(|&x| x == k).then_some(k),
        }
    }

    /// Neighbour lists as `(neighbour, sign)` pairs.
    pub fn neighbors(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        adj
    }

    pub fn adjacency(&self) -> SymMatrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for e in &self.edges {
            a[(e.u, e.v)] = e.sign.value();
            a[(e.v, e.u)] = e.sign.value();
        }
        SymMatrix::new(a).expect("adjacency is symmetric")
    }

    pub fn degree_matrix(&self) -> SymMatrix {
        let d: Vec<i64> = self.degrees().into_iter().map(|x| x as i64).collect();
        SymMatrix::diagonal(&d)
    }

    /// `L = D − A`.
    pub fn laplacian(&self) -> SymMatrix {
        self.degree_matrix().try_sub(&self.adjacency()).expect("same order")
    }

    /// Signed incidence matrix with `+1` at the lower endpoint of each edge.
    pub fn incidence(&self) -> IncidenceMatrix {
        IncidenceMatrix::of(self)
    }

    /// `−Σ`: every sign reversed.
    pub fn negate(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| Edge { sign: -e.sign, ..*e }).collect(),
        }
    }

    /// The underlying graph as an all-positive signed graph.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| Edge { sign: Sign::Positive, ..*e }).collect(),
        }
    }

    /// Switches by the vertex function `s`: `σ(uv) ↦ s(u) σ(uv) s(v)`.
    pub fn switch(&self, s: &[Sign]) -> Result<SignedGraph> {
        if s.len() != self.n {
            return Err(Error::SwitchLength { expected: self.n, got: s.len() });
        }
        Ok(SignedGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| Edge { sign: s[e.u] * e.sign * s[e.v], ..*e }).collect(),
        })
    }
}
