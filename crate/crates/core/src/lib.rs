//! Signed graphs, their products and line graphs, and the spectra of all of them.
//!
//! The crate is organised around a single input object, [`SignedGraph`], and a
//! handful of constructions on it:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | signed graph model, adjacency / degree / Laplacian matrices, switching |
//! | [`balance`] | per-component balance with a switching certificate |
//! | [`products`] | Kronecker algebra and NEPS (Cartesian, strong, symmetric p-sum) products |
//! | [`linegraph`] | signed line graph with `A(Λ) = 2I − HᵀH` |
//! | [`spectra`] | dense symmetric eigensolver, energy, Laplacian energy |
//! | [`families`] | signed paths, cycles, complete graphs, grids, cylinders, tori |
//! | [`formulas`] | closed-form spectra that never touch the eigensolver |
//! | [`oracle`] | brute-force balance and exact rank, used to check the above |
//! | [`verify`] | property suites pitting closed forms against the solver |
//!
//! ```
//! use signet::{families, spectra};
//!
//! let c5 = families::cycle(5, 1).unwrap();
//! let spectrum = spectra::spectrum(&c5).unwrap();
//! assert_eq!(spectrum.len(), 5);
//! assert!((spectra::energy(&c5).unwrap() - spectrum.sum_abs()).abs() < 1e-12);
//! ```

pub mod balance;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod incidence;
pub mod io;
pub mod linegraph;
pub mod matrix;
pub mod oracle;
pub mod products;
pub mod random;
pub mod spectra;
pub mod verify;

pub use balance::{balance_report, BalanceReport, Component};
pub use error::{Error, Result};
pub use graph::{Edge, Sign, SignedGraph};
pub use incidence::IncidenceMatrix;
pub use linegraph::{line_graph, LineGraphResult};
pub use matrix::{Matrix, SymMatrix};
pub use products::{Basis, ProductVertexMap};
pub use spectra::Spectrum;
