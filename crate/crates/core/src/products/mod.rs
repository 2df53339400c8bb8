//! Kronecker matrix algebra and NEPS products of signed graphs.
//!
//! A NEPS product is parameterised by a [`Basis`] of nonzero 0/1 vectors. Two
//! product vertices are adjacent when the coordinates where they differ form a
//! basis vector `β` and, on each of those coordinates, the factor vertices are
//! adjacent; the edge sign is the product of the factor signs there. The
//! adjacency matrix is then `Σ_β A_1^{β_1} ⊗ ⋯ ⊗ A_ν^{β_ν}`.
//!
//! Product vertices are flattened in row-major order (see [`ProductVertexMap`]),
//! which is the row order of the Kronecker product, so graph-level and
//! matrix-level constructions agree entry for entry.

mod basis;
mod kronecker;
mod neps;

pub use basis::Basis;
pub use kronecker::{kron, kron_power_sum, kron_sum_over_basis};
pub use neps::{
    average_degree, cartesian, cartesian_laplacian, neps, neps_degree_matrix, neps_single, strong,
    symmetric_p, ProductVertexMap,
};
