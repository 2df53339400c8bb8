use crate::error::{Error, Result};
use crate::matrix::{Matrix, SymMatrix};

use super::Basis;

/// Kronecker product `A ⊗ B`; entry `((i₁,i₂),(j₁,j₂))` is `a[i₁][j₁]·b[i₂][j₂]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a[(i, j)];
            if x == 0 {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = x * b[(k, l)];
                }
            }
        }
    }
    out
}

/// `Σ_p M_1^{k_{p1}} ⊗ ⋯ ⊗ M_ν^{k_{pν}}` for arbitrary nonnegative exponents.
pub fn kron_power_sum(mats: &[SymMatrix], exponents: &[Vec<u32>]) -> Result<SymMatrix> {
    if mats.is_empty() {
        return Err(Error::EmptyFactors);
    }
    let order: usize = mats.iter().map(SymMatrix::dim).product();
    let mut total = Matrix::zeros(order, order);
    for exps in exponents {
        if exps.len() != mats.len() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vector of length {} for {} matrices",
                exps.len(),
                mats.len()
            )));
        }
        let mut term = Matrix::identity(1);
        for (m, &k) in mats.iter().zip(exps) {
            term = kron(&term, &m.as_matrix().pow(k)?);
        }
        total = total.try_add(&term)?;
    }
    SymMatrix::new(total)
}

/// `Σ_{β ∈ B} M_1^{β_1} ⊗ ⋯ ⊗ M_ν^{β_ν}` with `M^0 = I`, `M^1 = M`.
pub fn kron_sum_over_basis(mats: &[SymMatrix], basis: &Basis) -> Result<SymMatrix> {
    if mats.len() != basis.nu() {
        return Err(Error::FactorCount { basis: basis.nu(), factors: mats.len() });
    }
    let exponents: Vec<Vec<u32>> =
        basis.iter().map(|beta| beta.iter().map(|&b| u32::from(b)).collect()).collect();
    kron_power_sum(mats, &exponents)
}
