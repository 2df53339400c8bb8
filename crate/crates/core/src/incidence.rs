//! Signed incidence matrix.
//!
//! Column `k` belongs to edge `k = (u, v, σ)` and carries `+1` in row `u` and
//! `−σ` in row `v`, so that the product of the two nonzeros is `−σ`. Any other
//! choice differs by negating columns; fixing this one keeps outputs
//! reproducible.

use crate::graph::SignedGraph;
use crate::matrix::{Matrix, SymMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix(Matrix);

impl IncidenceMatrix {
    pub fn of(g: &SignedGraph) -> Self {
        let mut h = Matrix::zeros(g.order(), g.size());
        for (k, e) in g.edges().iter().enumerate() {
            h[(e.u, k)] = 1;
            h[(e.v, k)] = -e.sign.value();
        }
        Self(h)
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, vertex: usize, edge: usize) -> i64 {
        self.0[(vertex, edge)]
    }

    /// `H Hᵀ`, which equals the Laplacian.
    pub fn kirchhoff(&self) -> SymMatrix {
        SymMatrix::new(&self.0 * &self.0.transpose()).expect("H Hᵀ is symmetric")
    }

    /// `Hᵀ H`, the edge-space Gram matrix.
    pub fn gram(&self) -> SymMatrix {
        SymMatrix::new(&self.0.transpose() * &self.0).expect("Hᵀ H is symmetric")
    }
}
