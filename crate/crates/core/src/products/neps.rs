use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::matrix::SymMatrix;

use super::{kron_sum_over_basis, Basis};

/// Bijection between product vertex tuples `(j_1, …, j_ν)` and flat indices,
/// `flat = ((j_1·n_2 + j_2)·n_3 + ⋯)·n_ν + j_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    orders: Vec<usize>,
}

impl ProductVertexMap {
    pub fn new(orders: Vec<usize>) -> Self {
        Self { orders }
    }

    pub fn of(factors: &[SignedGraph]) -> Self {
        Self::new(factors.iter().map(SignedGraph::order).collect())
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of product vertices.
    pub fn len(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flat(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.orders.len());
        tuple.iter().zip(&self.orders).fold(0, |acc, (&j, &n)| {
            debug_assert!(j < n);
            acc * n + j
        })
    }

    pub fn tuple(&self, mut flat: usize) -> Vec<usize> {
        let mut t = vec![0; self.orders.len()];
        for (slot, &n) in t.iter_mut().zip(&self.orders).rev() {
            *slot = flat % n;
            flat /= n;
        }
        t
    }
}

fn check_factors(factors: &[SignedGraph], basis: &Basis) -> Result<()> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    if factors.len() != basis.nu() {
        return Err(Error::FactorCount { basis: basis.nu(), factors: factors.len() });
    }
    Ok(())
}

/// Edges of the single-vector product `NEPS(Σ_1, …, Σ_ν; β)` as `(u, v, σ)`
/// with `u < v`.
///
/// Walks every product vertex and every choice of factor neighbours on the
/// coordinates where `β_i = 1`, so the work is proportional to the number of
/// product edges.
pub fn neps_single(factors: &[SignedGraph], beta: &[bool]) -> Vec<(usize, usize, Sign)> {
    assert_eq!(factors.len(), beta.len(), "one coordinate per factor");
    let map = ProductVertexMap::of(factors);
    let nbrs: Vec<Vec<Vec<(usize, Sign)>>> = factors.iter().map(SignedGraph::neighbors).collect();
    let active: Vec<usize> = (0..beta.len()).filter(|&i| beta[i]).collect();
    let mut edges = Vec::new();

    for u in 0..map.len() {
        let tu = map.tuple(u);
        let choices: Vec<&[(usize, Sign)]> = active.iter().map(|&i| nbrs[i][tu[i]].as_slice()).collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; active.len()];
        'combos: loop {
            let mut tv = tu.clone();
            let mut sign = Sign::Positive;
            for (slot, &i) in active.iter().enumerate() {
                let (w, s) = choices[slot][pick[slot]];
                tv[i] = w;
                sign = sign * s;
            }
            let v = map.flat(&tv);
            if u < v {
                edges.push((u, v, sign));
            }
            // odometer over neighbour choices
            let mut k = active.len();
            loop {
                if k == 0 {
                    break 'combos;
                }
                k -= 1;
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    continue 'combos;
                }
                pick[k] = 0;
            }
        }
    }
    edges
}

/// The NEPS (Cvetković) product over `basis`, with edges sorted by `(u, v)`.
pub fn neps(factors: &[SignedGraph], basis: &Basis) -> Result<SignedGraph> {
    check_factors(factors, basis)?;
    let mut edges: Vec<(usize, usize, Sign)> =
        basis.iter().flat_map(|beta| neps_single(factors, beta)).collect();
    edges.sort_unstable();
    let n = ProductVertexMap::of(factors).len();
    // Edge sets of distinct basis vectors are disjoint, so no duplicates arise.
    Ok(SignedGraph::new(n, edges).expect("NEPS edge sets are disjoint"))
}

pub fn cartesian(factors: &[SignedGraph]) -> Result<SignedGraph> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    neps(factors, &Basis::cartesian(factors.len())?)
}

pub fn strong(factors: &[SignedGraph]) -> Result<SignedGraph> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    neps(factors, &Basis::strong(factors.len())?)
}

/// Product over all weight-`p` vectors; `p = 1` is Cartesian, `p = ν` strong.
pub fn symmetric_p(factors: &[SignedGraph], p: usize) -> Result<SignedGraph> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    neps(factors, &Basis::symmetric(factors.len(), p)?)
}

/// `D = Σ_β D_1^{β_1} ⊗ ⋯ ⊗ D_ν^{β_ν}`.
pub fn neps_degree_matrix(factors: &[SignedGraph], basis: &Basis) -> Result<SymMatrix> {
    check_factors(factors, basis)?;
    let ds: Vec<SymMatrix> = factors.iter().map(SignedGraph::degree_matrix).collect();
    kron_sum_over_basis(&ds, basis)
}

/// `d̄ = Σ_β ∏_i d̄_i^{β_i}`.
pub fn average_degree(factors: &[SignedGraph], basis: &Basis) -> Result<f64> {
    check_factors(factors, basis)?;
    let dbar: Vec<f64> = factors.iter().map(SignedGraph::average_degree).collect();
    Ok(basis
        .iter()
        .map(|beta| beta.iter().zip(&dbar).filter(|(&b, _)| b).map(|(_, d)| d).product::<f64>())
        .sum())
}

/// Laplacian of the Cartesian product as `Σ_i I ⊗ ⋯ ⊗ L_i ⊗ ⋯ ⊗ I`.
pub fn cartesian_laplacian(factors: &[SignedGraph]) -> Result<SymMatrix> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    let ls: Vec<SymMatrix> = factors.iter().map(SignedGraph::laplacian).collect();
    kron_sum_over_basis(&ls, &Basis::cartesian(factors.len())?)
}
