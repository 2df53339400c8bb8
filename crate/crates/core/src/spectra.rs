//! Dense symmetric eigensolver, spectra, energy and Laplacian energy.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::SymMatrix;

/// Absolute tolerance for grouping eigenvalues into multiplicities.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

/// Absolute tolerance for comparing closed-form and computed spectra.
pub const CLOSED_FORM_TOL: f64 = 1e-8;

/// Solver stops once the off-diagonal Frobenius norm drops below this
/// fraction of the full Frobenius norm.
pub const RELATIVE_OFF_DIAGONAL_TOL: f64 = 1e-12;

pub const MAX_SWEEPS: usize = 100;

/// Sorted eigenvalue list with the tolerance used to group multiplicities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    #[serde(skip)]
    tol: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values, tol }
    }

    pub fn from_values(values: Vec<f64>) -> Self {
        Self::new(values, MULTIPLICITY_TOL)
    }

    /// Weakly increasing eigenvalues.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_abs(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Number of eigenvalues within the spectrum's own tolerance of `x`.
    pub fn multiplicity(&self, x: f64) -> usize {
        multiplicity_of(self, x, self.tol)
    }

    /// `{−λ}`, re-sorted.
    pub fn negated(&self) -> Spectrum {
        Spectrum::new(self.values.iter().map(|x| -x).collect(), self.tol)
    }

    /// `{c + λ}`.
    pub fn shifted(&self, c: f64) -> Spectrum {
        Spectrum::new(self.values.iter().map(|x| x + c).collect(), self.tol)
    }

    /// Largest pointwise gap between two sorted lists of the same length.
    /// For sorted lists this is the bottleneck distance between the multisets.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Multiset equality within `tol`.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    /// Distinct values with their multiplicities, grouped greedily under `tol`.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = 0.0;
        for &x in &self.values {
            match out.last_mut() {
                Some((_, count)) if x - start <= self.tol => *count += 1,
                _ => {
                    start = x;
                    out.push((x, 1));
                }
            }
        }
        out
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(x, k)| if k == 1 { format!("{x:.6}") } else { format!("{x:.6}^{k}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Count of eigenvalues within `tol` of `x`.
pub fn multiplicity_of(s: &Spectrum, x: f64, tol: f64) -> usize {
    s.values.iter().filter(|&&v| (v - x).abs() <= tol).count()
}

/// Eigenvalues of an integer symmetric matrix.
pub fn eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.dim();
    let values = symmetric_eigenvalues(n, m.as_matrix().to_f64())?;
    Ok(Spectrum::from_values(values))
}

/// Eigenvalues of a real symmetric matrix given row-major, by cyclic Jacobi
/// rotations, sorted ascending. Only the upper triangle is trusted; the input
/// is symmetrised.
pub fn symmetric_eigenvalues(n: usize, mut a: Vec<f64>) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::DimensionMismatch(format!("{} entries for order {n}", a.len())));
    }
    if n <= 1 {
        return Ok(a);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            a[j * n + i] = a[i * n + j];
        }
    }

    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = RELATIVE_OFF_DIAGONAL_TOL * frobenius;
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            return Ok(sorted_diagonal(n, &a));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                } else {
                    0.0
                };
                if t == 0.0 {
                    continue;
                }
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let off = off_norm(&a);
    if off <= threshold {
        Ok(sorted_diagonal(n, &a))
    } else {
        Err(Error::NoConvergence { sweeps: MAX_SWEEPS, off_norm: off })
    }
}

fn sorted_diagonal(n: usize, a: &[f64]) -> Vec<f64> {
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    d.sort_by(f64::total_cmp);
    d
}

/// Adjacency spectrum.
pub fn spectrum(g: &SignedGraph) -> Result<Spectrum> {
    eigenvalues(&g.adjacency())
}

pub fn laplacian_spectrum(g: &SignedGraph) -> Result<Spectrum> {
    eigenvalues(&g.laplacian())
}

/// `E(Σ) = Σ |λ_i|`.
pub fn energy(g: &SignedGraph) -> Result<f64> {
    Ok(spectrum(g)?.sum_abs())
}

/// `E_L(Σ) = Σ |λ_i^L − d̄|` with `d̄ = 2|E|/|V|`; zero on the null graph.
pub fn laplacian_energy(g: &SignedGraph) -> Result<f64> {
    if g.order() == 0 {
        return Ok(0.0);
    }
    Ok(laplacian_energy_of(&laplacian_spectrum(g)?, g.average_degree()))
}

pub fn laplacian_energy_of(laplacian: &Spectrum, average_degree: f64) -> f64 {
    laplacian.values().iter().map(|x| (x - average_degree).abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use approx::assert_abs_diff_eq;

    fn complete(n: usize) -> SignedGraph {
        let edges: Vec<_> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        SignedGraph::all_positive(n, &edges).unwrap()
    }

    #[test]
    fn zero_matrix() {
        let s = eigenvalues(&SymMatrix::zeros(3)).unwrap();
        assert_eq!(s.values(), &[0.0, 0.0, 0.0]);
        assert_eq!(multiplicity_of(&s, 0.0, 1e-6), 3);
    }

    #[test]
    fn degenerate_orders() {
        assert!(eigenvalues(&SymMatrix::zeros(0)).unwrap().is_empty());
        let one = SymMatrix::diagonal(&[7]);
        assert_eq!(eigenvalues(&one).unwrap().values(), &[7.0]);
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..=9 {
            let s = spectrum(&complete(n)).unwrap();
            assert_eq!(s.multiplicity(-1.0), n - 1);
            assert_eq!(s.multiplicity((n - 1) as f64), 1);
            assert_abs_diff_eq!(s.max().unwrap(), (n - 1) as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn negative_square_spectrum() {
        // one negative edge on C4: 2cos((2j-1)π/4), j = 1..4
        let c4 = SignedGraph::from_triples(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        let expected = Spectrum::from_values(
            (1..=4)
                .map(|j| 2.0 * ((2 * j - 1) as f64 * std::f64::consts::PI / 4.0).cos())
                .collect(),
        );
        let s = spectrum(&c4).unwrap();
        assert!(s.matches(&expected, 1e-12), "{s} vs {expected}");
        let r2 = std::f64::consts::SQRT_2;
        assert!(s.matches(&Spectrum::from_values(vec![-r2, -r2, r2, r2]), 1e-12));
    }

    #[test]
    fn edgeless_energies_are_zero() {
        let g = SignedGraph::empty(4);
        assert_eq!(energy(&g).unwrap(), 0.0);
        assert_eq!(laplacian_energy(&g).unwrap(), 0.0);
        assert_eq!(laplacian_energy(&SignedGraph::empty(0)).unwrap(), 0.0);
    }

    #[test]
    fn spectrum_helpers() {
        let s = Spectrum::from_values(vec![2.0, -1.0, -1.0 + 1e-9, 0.5]);
        assert_eq!(s.values()[0], -1.0);
        assert_eq!(s.grouped().len(), 3);
        assert_eq!(s.grouped()[0].1, 2);
        assert_eq!(s.negated().max(), Some(1.0));
        assert!(!s.matches(&Spectrum::from_values(vec![0.0]), 1.0));
        assert_eq!(s.shifted(1.0).min(), Some(0.0));
    }

    #[test]
    fn dense_matrix_with_known_eigenvalues() {
        // [[2,1,0],[1,2,1],[0,1,2]] has eigenvalues 2 - √2, 2, 2 + √2
        let m = SymMatrix::new(Matrix::from_rows(&[[2, 1, 0], [1, 2, 1], [0, 1, 2]]).unwrap()).unwrap();
        let s = eigenvalues(&m).unwrap();
        let r2 = std::f64::consts::SQRT_2;
        assert!(s.matches(&Spectrum::from_values(vec![2.0 - r2, 2.0, 2.0 + r2]), 1e-13));
    }

    #[test]
    fn rejects_wrong_length() {
        assert!(symmetric_eigenvalues(2, vec![1.0; 3]).is_err());
    }
}
