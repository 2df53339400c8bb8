//! Closed-form spectra and energies, computed from cosine expressions and
//! from supplied factor spectra, never from the eigensolver.
//!
//! Indices follow the usual 1-based conventions (`j = 1..n`); values are
//! emitted in index order and sorted only when converted to a [`Spectrum`].
//!
//! Several closed forms as commonly printed contain slips; the corrected
//! forms live here, and the printed ones in [`variants`] so they can be
//! checked against the solver side by side.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectra::{Spectrum, MULTIPLICITY_TOL};

/// Parity bracket `[r]`: 0 for even `r`, 1 for odd.
pub fn parity(r: usize) -> usize {
    r % 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

/// Where a closed-form eigenvalue comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// A 1-based index tuple `(i, j, …)`.
    Index(Vec<usize>),
    /// One of the "additional" copies of a value.
    Additional,
}

/// A closed-form eigenvalue list: indexed values plus additional copies of
/// fixed values. An additional count may be negative, in which case it
/// removes copies already present among the indexed values.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSpectrum {
    kind: SpectrumKind,
    indexed: Vec<(Vec<usize>, f64)>,
    additional: Vec<(f64, i64)>,
}

impl ClosedFormSpectrum {
    pub fn new(kind: SpectrumKind) -> Self {
        Self { kind, indexed: Vec::new(), additional: Vec::new() }
    }

    pub fn push(&mut self, index: Vec<usize>, value: f64) {
        self.indexed.push((index, value));
    }

    pub fn add(&mut self, value: f64, count: i64) {
        if count != 0 {
            self.additional.push((value, count));
        }
    }

    fn with_additional(mut self, value: f64, count: i64) -> Self {
        self.add(value, count);
        self
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn indexed(&self) -> &[(Vec<usize>, f64)] {
        &self.indexed
    }

    pub fn additional(&self) -> &[(f64, i64)] {
        &self.additional
    }

    /// Every value with its origin, before deductions are applied.
    pub fn entries(&self) -> Vec<(Origin, f64)> {
        let mut out: Vec<(Origin, f64)> =
            self.indexed.iter().map(|(ix, v)| (Origin::Index(ix.clone()), *v)).collect();
        for &(v, c) in &self.additional {
            out.extend((0..c.max(0)).map(|_| (Origin::Additional, v)));
        }
        out
    }

    /// Net number of eigenvalues.
    pub fn net_len(&self) -> i64 {
        self.indexed.len() as i64 + self.additional.iter().map(|a| a.1).sum::<i64>()
    }

    /// Sorted values with deductions applied. A deduction that finds no
    /// matching value within [`MULTIPLICITY_TOL`] is an error.
    pub fn values(&self) -> Result<Vec<f64>> {
        let mut vals: Vec<f64> = self.indexed.iter().map(|x| x.1).collect();
        for &(v, c) in &self.additional {
            if c > 0 {
                vals.extend(std::iter::repeat_n(v, c as usize));
            }
        }
        for &(v, c) in &self.additional {
            for _ in 0..(-c).max(0) {
                let at = vals
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| (*x - v).abs() <= MULTIPLICITY_TOL)
                    .min_by(|a, b| (a.1 - v).abs().total_cmp(&(b.1 - v).abs()))
                    .map(|(k, _)| k)
                    .ok_or_else(|| Error::Inconsistent(format!("nothing to deduct for eigenvalue {v}")))?;
                vals.swap_remove(at);
            }
        }
        vals.sort_by(f64::total_cmp);
        Ok(vals)
    }

    pub fn to_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::from_values(self.values()?))
    }

    /// `Σ|λ|` over the net values.
    pub fn sum_abs(&self) -> Result<f64> {
        Ok(self.values()?.iter().map(|x| x.abs()).sum())
    }

    pub fn negated(&self) -> Self {
        Self {
            kind: self.kind,
            indexed: self.indexed.iter().map(|(ix, v)| (ix.clone(), -v)).collect(),
            additional: self.additional.iter().map(|&(v, c)| (-v, c)).collect(),
        }
    }

    /// Applies `f` to every value, keeping origins and counts.
    pub fn map(&self, kind: SpectrumKind, f: impl Fn(f64) -> f64) -> Self {
        Self {
            kind,
            indexed: self.indexed.iter().map(|(ix, v)| (ix.clone(), f(*v))).collect(),
            additional: self.additional.iter().map(|&(v, c)| (f(v), c)).collect(),
        }
    }
}

/// Spectra and energies of one graph. Laplacian data is absent where no
/// closed form is available.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub adjacency: ClosedFormSpectrum,
    pub laplacian: Option<ClosedFormSpectrum>,
    pub energy: f64,
    pub laplacian_energy: Option<f64>,
}

fn indexed_1d(kind: SpectrumKind, n: usize, f: impl Fn(usize) -> f64) -> ClosedFormSpectrum {
    let mut s = ClosedFormSpectrum::new(kind);
    for j in 1..=n {
        s.push(vec![j], f(j));
    }
    s
}

fn indexed_2d(kind: SpectrumKind, m: usize, n: usize, f: impl Fn(usize, usize) -> f64) -> ClosedFormSpectrum {
    let mut s = ClosedFormSpectrum::new(kind);
    for i in 1..=m {
        for j in 1..=n {
            s.push(vec![i, j], f(i, j));
        }
    }
    s
}

fn double_sum(m: usize, n: usize, f: impl Fn(usize, usize) -> f64) -> f64 {
    (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| f(i, j)).sum()
}

/// `cos((2j − [r])π / n)`.
fn cycle_cos(j: usize, r: usize, n: usize) -> f64 {
    ((2 * j - parity(r)) as f64 * PI / n as f64).cos()
}

// ---------------------------------------------------------------- paths, cycles

/// `2cos(πj/(n+1))`, `j = 1..n`.
pub fn path_spectrum(n: usize) -> ClosedFormSpectrum {
    indexed_1d(SpectrumKind::Adjacency, n, |j| 2.0 * (PI * j as f64 / (n + 1) as f64).cos())
}

/// `2(1 + cos(πj/n))`, `j = 1..n`; `λ_n^L = 0`.
pub fn path_laplacian_spectrum(n: usize) -> ClosedFormSpectrum {
    indexed_1d(SpectrumKind::Laplacian, n, |j| 2.0 * (1.0 + (PI * j as f64 / n as f64).cos()))
}

/// `2cos((2j − [r])π/n)`, `j = 1..n`.
pub fn cycle_spectrum(n: usize, r: usize) -> ClosedFormSpectrum {
    indexed_1d(SpectrumKind::Adjacency, n, |j| 2.0 * cycle_cos(j, r, n))
}

/// `2(1 − cos((2j − [r])π/n))`; zero occurs iff `r` is even.
pub fn cycle_laplacian_spectrum(n: usize, r: usize) -> ClosedFormSpectrum {
    indexed_1d(SpectrumKind::Laplacian, n, |j| 2.0 * (1.0 - cycle_cos(j, r, n)))
}

/// Signed path `P_n^{(r)}`; independent of `r`. Average degree `2 − 2/n`.
pub fn path_forms(n: usize) -> ClosedForms {
    let adjacency = path_spectrum(n);
    let energy = (1..=n).map(|j| 2.0 * (PI * j as f64 / (n + 1) as f64).cos().abs()).sum();
    let laplacian_energy =
        (1..=n).map(|j| (2.0 * (PI * j as f64 / n as f64).cos() + 2.0 / n as f64).abs()).sum();
    ClosedForms {
        adjacency,
        laplacian: Some(path_laplacian_spectrum(n)),
        energy,
        laplacian_energy: Some(laplacian_energy),
    }
}

/// Signed cycle `C_n^{(r)}`; 2-regular, so `E_L = E`.
pub fn cycle_forms(n: usize, r: usize) -> ClosedForms {
    let energy = (1..=n).map(|j| 2.0 * cycle_cos(j, r, n).abs()).sum();
    ClosedForms {
        adjacency: cycle_spectrum(n, r),
        laplacian: Some(cycle_laplacian_spectrum(n, r)),
        energy,
        laplacian_energy: Some(energy),
    }
}

// ---------------------------------------------------------------- grids

/// `P_m^{(r1)} × P_n^{(r2)}` (balanced, so independent of the signs).
///
/// Adjacency `2(cos πi/(m+1) + cos πj/(n+1))`; Laplacian
/// `2(2 + cos πi/m + cos πj/n)`; `E_L = 2ΣΣ|cos πi/m + cos πj/n + 1/m + 1/n|`
/// from the average degree `4 − 2/m − 2/n`.
pub fn grid_spectra(m: usize, n: usize) -> ClosedForms {
    let a = |i: usize, j: usize| {
        (PI * i as f64 / (m + 1) as f64).cos() + (PI * j as f64 / (n + 1) as f64).cos()
    };
    let l = |i: usize, j: usize| (PI * i as f64 / m as f64).cos() + (PI * j as f64 / n as f64).cos();
    let (mf, nf) = (m as f64, n as f64);
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * a(i, j)),
        laplacian: Some(indexed_2d(SpectrumKind::Laplacian, m, n, |i, j| 2.0 * (2.0 + l(i, j)))),
        energy: 2.0 * double_sum(m, n, |i, j| a(i, j).abs()),
        laplacian_energy: Some(2.0 * double_sum(m, n, |i, j| (l(i, j) + 1.0 / mf + 1.0 / nf).abs())),
    }
}

/// `C_m^{(r1)} × P_n^{(r2)}`, with `θ_i = (2i − [r1])π/m`.
///
/// Adjacency `2(cos θ_i + cos jπ/(n+1))`; Laplacian `2(2 − cos θ_i + cos jπ/n)`;
/// `E_L = 2ΣΣ|−cos θ_i + cos jπ/n + 1/n|` from the average degree `4 − 2/n`.
pub fn cylinder_spectra(m: usize, r1: usize, n: usize) -> ClosedForms {
    let a = |i: usize, j: usize| cycle_cos(i, r1, m) + (PI * j as f64 / (n + 1) as f64).cos();
    let l = |i: usize, j: usize| -cycle_cos(i, r1, m) + (PI * j as f64 / n as f64).cos();
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * a(i, j)),
        laplacian: Some(indexed_2d(SpectrumKind::Laplacian, m, n, |i, j| 2.0 * (2.0 + l(i, j)))),
        energy: 2.0 * double_sum(m, n, |i, j| a(i, j).abs()),
        laplacian_energy: Some(2.0 * double_sum(m, n, |i, j| (l(i, j) + 1.0 / n as f64).abs())),
    }
}

/// `C_m^{(r1)} × C_n^{(r2)}`; 4-regular, so `E_L = E`.
pub fn torus_spectra(m: usize, r1: usize, n: usize, r2: usize) -> ClosedForms {
    let s = |i: usize, j: usize| cycle_cos(i, r1, m) + cycle_cos(j, r2, n);
    let energy = 2.0 * double_sum(m, n, |i, j| s(i, j).abs());
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * s(i, j)),
        laplacian: Some(indexed_2d(SpectrumKind::Laplacian, m, n, |i, j| 4.0 - 2.0 * s(i, j))),
        energy,
        laplacian_energy: Some(energy),
    }
}

// ---------------------------------------------------------------- line graphs

fn check_zero_multiplicity(spec: &Spectrum, expected: usize, what: &str) -> Result<()> {
    let got = spec.multiplicity(0.0);
    if got != expected {
        return Err(Error::Inconsistent(format!(
            "{what}: Laplacian has {got} zero eigenvalues, expected {expected}"
        )));
    }
    Ok(())
}

fn signed(x: usize) -> i64 {
    x as i64
}

/// Line graph from the Laplacian spectrum of `Σ` (order `n`, size `m`,
/// `b = b(Σ)`): `2 − λ^L` for each positive `λ^L`, and `2` with
/// multiplicity `m − n + b`.
pub fn line_spectrum_general(laplacian: &Spectrum, m: usize, n: usize, b: usize) -> Result<ClosedFormSpectrum> {
    if laplacian.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "Laplacian spectrum has {} values for order {n}",
            laplacian.len()
        )));
    }
    check_zero_multiplicity(laplacian, b, "line graph")?;
    let mut s = ClosedFormSpectrum::new(SpectrumKind::Adjacency);
    for (i, &l) in laplacian.values().iter().enumerate() {
        if l.abs() > laplacian.tol() {
            s.push(vec![i + 1], 2.0 - l);
        }
    }
    Ok(s.with_additional(2.0, signed(m) - signed(n) + signed(b)))
}

/// `Σ_{λ^L > 0} |λ^L − 2| + 2(m − n + b)`.
pub fn line_energy_general(laplacian: &Spectrum, m: usize, n: usize, b: usize) -> Result<f64> {
    line_spectrum_general(laplacian, m, n, b)?;
    let tol = laplacian.tol();
    let sum: f64 = laplacian.values().iter().filter(|l| l.abs() > tol).map(|l| (l - 2.0).abs()).sum();
    Ok(sum + 2.0 * (signed(m) - signed(n) + signed(b)) as f64)
}

/// Line graph of a signed graph whose underlying graph is `k`-regular, from
/// its adjacency spectrum; `b_plus = b(Σ)`, `b_minus = b(−Σ)`.
///
/// Adjacency `λ_i − k + 2` for the `n − b(Σ)` eigenvalues below `k`, plus `2`
/// with multiplicity `m − n + b(Σ)`; Laplacian `3k − 4 − λ_i`, plus `2k − 4`
/// with the same multiplicity; the line graph is `(2k − 2)`-regular, so
/// `E_L = E`.
pub fn line_spectrum_regular(
    adjacency: &Spectrum,
    k: usize,
    m: usize,
    n: usize,
    b_plus: usize,
    b_minus: usize,
) -> Result<ClosedForms> {
    if k == 0 {
        return Err(Error::NotRegular);
    }
    if adjacency.len() != n {
        return Err(Error::DimensionMismatch(format!("adjacency spectrum has {} values for order {n}", adjacency.len())));
    }
    if 2 * m != k * n {
        return Err(Error::Inconsistent(format!("{m} edges on {n} vertices cannot be {k}-regular")));
    }
    let kf = k as f64;
    if adjacency.multiplicity(kf) != b_plus {
        return Err(Error::Inconsistent(format!("eigenvalue {k} should occur {b_plus} times")));
    }
    if adjacency.multiplicity(-kf) != b_minus {
        return Err(Error::Inconsistent(format!("eigenvalue -{k} should occur {b_minus} times")));
    }

    let extra = signed(m) - signed(n) + signed(b_plus);
    let kept = &adjacency.values()[..n - b_plus];
    let mut adj = ClosedFormSpectrum::new(SpectrumKind::Adjacency);
    let mut lap = ClosedFormSpectrum::new(SpectrumKind::Laplacian);
    for (i, &l) in kept.iter().enumerate() {
        adj.push(vec![i + 1], l - kf + 2.0);
        lap.push(vec![i + 1], 3.0 * kf - 4.0 - l);
    }
    let energy = kept.iter().map(|l| (l - (kf - 2.0)).abs()).sum::<f64>() + 2.0 * extra as f64;
    Ok(ClosedForms {
        adjacency: adj.with_additional(2.0, extra),
        laplacian: Some(lap.with_additional(2.0 * kf - 4.0, extra)),
        energy,
        laplacian_energy: Some(energy),
    })
}

/// Iterates all index tuples of the given factor orders, 1-based.
fn for_each_tuple(orders: &[usize], mut f: impl FnMut(&[usize])) {
    if orders.contains(&0) {
        return;
    }
    let mut t = vec![1usize; orders.len()];
    loop {
        f(&t);
        let mut k = orders.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            t[k] += 1;
            if t[k] <= orders[k] {
                break;
            }
            t[k] = 1;
        }
    }
}

/// Line graph of a Cartesian product from the factors' Laplacian spectra
/// and balanced-component counts; `avg_degree` is that of the product and
/// `n` its order.
///
/// Eigenvalues `2 − (λ^L_{1j_1} + ⋯ + λ^L_{νj_ν})` over all index tuples,
/// plus `2` with multiplicity `m − n = n(d̄/2 − 1)`, which is a deduction
/// when negative.
pub fn line_spectrum_cartesian(
    factor_laplacians: &[Spectrum],
    b_factors: &[usize],
    avg_degree: f64,
    n: usize,
) -> Result<ClosedForms> {
    if factor_laplacians.is_empty() {
        return Err(Error::EmptyFactors);
    }
    if factor_laplacians.len() != b_factors.len() {
        return Err(Error::DimensionMismatch("one balanced-component count per factor".into()));
    }
    let orders: Vec<usize> = factor_laplacians.iter().map(Spectrum::len).collect();
    if orders.iter().product::<usize>() != n {
        return Err(Error::DimensionMismatch(format!("factor orders {orders:?} do not multiply to {n}")));
    }
    for (s, &b) in factor_laplacians.iter().zip(b_factors) {
        check_zero_multiplicity(s, b, "Cartesian factor")?;
    }
    let twice_m = n as f64 * avg_degree;
    let m = twice_m.round();
    if (twice_m - m).abs() > 1e-6 || m as i64 % 2 != 0 {
        return Err(Error::Inconsistent(format!("n·d̄ = {twice_m} is not an even integer")));
    }
    let m = m as i64 / 2;

    let mut adj = ClosedFormSpectrum::new(SpectrumKind::Adjacency);
    let mut energy = 0.0;
    for_each_tuple(&orders, |t| {
        let sum: f64 = t.iter().zip(factor_laplacians).map(|(&j, s)| s.values()[j - 1]).sum();
        adj.push(t.to_vec(), 2.0 - sum);
        energy += (sum - 2.0).abs();
    });
    let extra = m - n as i64;
    energy += 2.0 * extra as f64;
    Ok(ClosedForms { adjacency: adj.with_additional(2.0, extra), laplacian: None, energy, laplacian_energy: None })
}

/// Line graph of a Cartesian product of signed graphs with `k_i`-regular
/// underlying graphs, from the factors' adjacency spectra; `k = Σ k_i`.
///
/// Eigenvalues `2 − k + Σλ_{ij_i}` and Laplacian eigenvalues `3k − 4 − Σλ_{ij_i}`
/// over all tuples, plus `2` (resp. `2k − 4`) with multiplicity
/// `n(k/2 − 1)`; `E = E_L`.
pub fn line_spectrum_cartesian_regular(factor_adjacency: &[Spectrum], degrees: &[usize]) -> Result<ClosedForms> {
    if factor_adjacency.is_empty() {
        return Err(Error::EmptyFactors);
    }
    if factor_adjacency.len() != degrees.len() {
        return Err(Error::DimensionMismatch("one degree per factor".into()));
    }
    let orders: Vec<usize> = factor_adjacency.iter().map(Spectrum::len).collect();
    let n: usize = orders.iter().product();
    let k: usize = degrees.iter().sum();
    if !(n * k).is_multiple_of(2) {
        return Err(Error::Inconsistent("n·k must be even".into()));
    }
    let kf = k as f64;
    let mut adj = ClosedFormSpectrum::new(SpectrumKind::Adjacency);
    let mut lap = ClosedFormSpectrum::new(SpectrumKind::Laplacian);
    let mut energy = 0.0;
    for_each_tuple(&orders, |t| {
        let sum: f64 = t.iter().zip(factor_adjacency).map(|(&j, s)| s.values()[j - 1]).sum();
        adj.push(t.to_vec(), 2.0 - kf + sum);
        lap.push(t.to_vec(), 3.0 * kf - 4.0 - sum);
        energy += (2.0 - kf + sum).abs();
    });
    let extra = (n * k / 2) as i64 - n as i64;
    energy += 2.0 * extra as f64;
    Ok(ClosedForms {
        adjacency: adj.with_additional(2.0, extra),
        laplacian: Some(lap.with_additional(2.0 * kf - 4.0, extra)),
        energy,
        laplacian_energy: Some(energy),
    })
}

/// `Λ(P_m^{(r1)} × P_n^{(r2)})`: `−2 − 2(cos πi/m + cos πj/n)` over all
/// `(i, j)` (the `(m, n)` term is `2`), plus `2` with multiplicity
/// `(m − 1)(n − 1) − 1`.
pub fn line_grid_spectra(m: usize, n: usize) -> ClosedForms {
    let c = |i: usize, j: usize| (PI * i as f64 / m as f64).cos() + (PI * j as f64 / n as f64).cos();
    let extra = (signed(m) - 1) * (signed(n) - 1) - 1;
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| -2.0 - 2.0 * c(i, j))
            .with_additional(2.0, extra),
        laplacian: None,
        energy: 2.0 * double_sum(m, n, |i, j| (1.0 + c(i, j)).abs()) + 2.0 * extra as f64,
        laplacian_energy: None,
    }
}

/// `Λ(C_m^{(r1)} × P_n^{(r2)})`: `2(cos θ_i − cos jπ/n − 1)` over all `(i, j)`,
/// plus `2` with multiplicity `m(n − 1)`.
pub fn line_cylinder_spectra(m: usize, r1: usize, n: usize) -> ClosedForms {
    let c = |i: usize, j: usize| cycle_cos(i, r1, m) - (PI * j as f64 / n as f64).cos();
    let extra = signed(m) * (signed(n) - 1);
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * (c(i, j) - 1.0))
            .with_additional(2.0, extra),
        laplacian: None,
        energy: 2.0 * double_sum(m, n, |i, j| (1.0 - c(i, j)).abs()) + 2.0 * extra as f64,
        laplacian_energy: None,
    }
}

/// `Λ(C_m^{(r1)} × C_n^{(r2)})`: `2(cos θ_i + cos φ_j − 1)` plus `2` with
/// multiplicity `mn`; Laplacian `8 − 2(cos θ_i + cos φ_j)` plus `4` with
/// multiplicity `mn`; `E = E_L = 2ΣΣ|cos θ_i + cos φ_j − 1| + 2mn`.
pub fn line_torus_spectra(m: usize, r1: usize, n: usize, r2: usize) -> ClosedForms {
    let s = |i: usize, j: usize| cycle_cos(i, r1, m) + cycle_cos(j, r2, n);
    let extra = signed(m) * signed(n);
    let energy = 2.0 * double_sum(m, n, |i, j| (s(i, j) - 1.0).abs()) + 2.0 * extra as f64;
    ClosedForms {
        adjacency: indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * (s(i, j) - 1.0))
            .with_additional(2.0, extra),
        laplacian: Some(
            indexed_2d(SpectrumKind::Laplacian, m, n, |i, j| 8.0 - 2.0 * s(i, j)).with_additional(4.0, extra),
        ),
        energy,
        laplacian_energy: Some(energy),
    }
}

// ---------------------------------------------------------------- homogeneous

/// Line graphs of `+G`, `−G` and the unsigned line graph of `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousLineSpectra {
    pub positive: ClosedForms,
    pub negative: ClosedForms,
    pub unsigned: ClosedForms,
}

/// From the Laplacian and signless Laplacian spectra of `G` (order `n`, size
/// `m`, `c` components, `c_b` bipartite components). `Λ(+G)` has `2 − λ^L(+G)`
/// and `2 ×(m − n + c)`; `Λ(−G)` has `2 − λ^L(−G)` and `2 ×(m − n + c_b)`; the
/// unsigned `Λ(G)` has the negatives of `Λ(−G)`.
pub fn homogeneous_line_spectra(
    laplacian: &Spectrum,
    signless_laplacian: &Spectrum,
    m: usize,
    n: usize,
    c: usize,
    c_b: usize,
) -> Result<HomogeneousLineSpectra> {
    let general = |s: &Spectrum, b: usize| -> Result<ClosedForms> {
        Ok(ClosedForms {
            adjacency: line_spectrum_general(s, m, n, b)?,
            laplacian: None,
            energy: line_energy_general(s, m, n, b)?,
            laplacian_energy: None,
        })
    };
    let positive = general(laplacian, c)?;
    let negative = general(signless_laplacian, c_b)?;
    let unsigned = ClosedForms { adjacency: negative.adjacency.negated(), ..negative.clone() };
    Ok(HomogeneousLineSpectra { positive, negative, unsigned })
}

/// Regular case, from the adjacency spectrum of the `k`-regular unsigned `G`.
///
/// `Λ(+G)`: `λ − k + 2` and Laplacian `3k − 4 − λ` for `λ < k`, with `2` and
/// `2k − 4` of multiplicity `m − n + c`. `Λ(−G)`: `2 − k − λ` and Laplacian
/// `3k − 4 + λ` for `λ > −k`, with multiplicity `m − n + c_b`. `Λ(G)`: the
/// negatives of `Λ(−G)`, Laplacian `k − λ` plus `2k ×(m − n + c_b)`.
pub fn homogeneous_line_spectra_regular(
    adjacency: &Spectrum,
    k: usize,
    m: usize,
    n: usize,
    c: usize,
    c_b: usize,
) -> Result<HomogeneousLineSpectra> {
    let positive = line_spectrum_regular(adjacency, k, m, n, c, c_b)?;
    let negative = line_spectrum_regular(&adjacency.negated(), k, m, n, c_b, c)?;
    let kf = k as f64;
    let unsigned_lap = negative
        .laplacian
        .as_ref()
        .expect("regular forms carry a Laplacian")
        .map(SpectrumKind::Laplacian, |x| 4.0 * kf - 4.0 - x);
    let unsigned = ClosedForms {
        adjacency: negative.adjacency.negated(),
        laplacian: Some(unsigned_lap),
        energy: negative.energy,
        laplacian_energy: Some(negative.energy),
    };
    Ok(HomogeneousLineSpectra { positive, negative, unsigned })
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `Λ(+K_n)` and `Λ(−K_n)` in closed form (`n ≥ 1`).
///
/// `K_n` has eigenvalues `n − 1` once and `−1` with multiplicity `n − 1`, so
/// `Λ(+K_n)`: `2 − n ×(n−1)`, `2 ×C(n−1,2)`; Laplacian `3n − 6 ×(n−1)`,
/// `2n − 6 ×C(n−1,2)`; `E = E_L = 2(n−1)(n−2)`.
/// `Λ(−K_n)`: `−2(n−2) ×1`, `4 − n ×(n−1)`, `2 ×(C(n−1,2) − 1)`; Laplacian
/// `4n − 8 ×1`, `3n − 8 ×(n−1)`, `2n − 6 ×(C(n−1,2) − 1)`;
/// `E = E_L = 2(n−2) + (n−1)|n−4| + n(n−3)`.
pub fn complete_line_spectra(n: usize) -> Result<HomogeneousLineSpectra> {
    if n == 0 {
        return Err(Error::FamilyParams("complete graph needs n >= 1".into()));
    }
    let ni = n as i64;
    let nf = n as f64;
    let mult = |v: f64, c: i64, kind| {
        let mut s = ClosedFormSpectrum::new(kind);
        s.add(v, c);
        s
    };
    let both = |a: ClosedFormSpectrum, b: ClosedFormSpectrum| {
        let mut s = a;
        for &(v, c) in b.additional() {
            s.add(v, c);
        }
        s
    };
    let c2 = binom2(ni - 1);

    let pos_adj = both(mult(2.0 - nf, ni - 1, SpectrumKind::Adjacency), mult(2.0, c2, SpectrumKind::Adjacency));
    let pos_lap = both(
        mult(3.0 * nf - 6.0, ni - 1, SpectrumKind::Laplacian),
        mult(2.0 * nf - 6.0, c2, SpectrumKind::Laplacian),
    );
    let pos_energy = (2 * (ni - 1) * (ni - 2)).abs() as f64;

    // −K_n is balanced only for n ≤ 2, where its top eigenvalue 1 is k itself
    // and so drops out.
    let b_neg = i64::from(n <= 2);
    let extra = ni * (ni - 1) / 2 - ni + b_neg;
    let mut neg_adj = ClosedFormSpectrum::new(SpectrumKind::Adjacency);
    let mut neg_lap = ClosedFormSpectrum::new(SpectrumKind::Laplacian);
    if n >= 2 {
        neg_adj.add(-2.0 * (nf - 2.0), 1);
        neg_lap.add(4.0 * nf - 8.0, 1);
        neg_adj.add(4.0 - nf, ni - 1 - b_neg);
        neg_lap.add(3.0 * nf - 8.0, ni - 1 - b_neg);
        neg_adj.add(2.0, extra);
        neg_lap.add(2.0 * nf - 6.0, extra);
    }
    let neg_energy = neg_adj.sum_abs()?;

    let negative = ClosedForms {
        adjacency: neg_adj.clone(),
        laplacian: Some(neg_lap.clone()),
        energy: neg_energy,
        laplacian_energy: Some(neg_energy),
    };
    let unsigned = ClosedForms {
        adjacency: neg_adj.negated(),
        laplacian: Some(neg_lap.map(SpectrumKind::Laplacian, |x| 4.0 * nf - 8.0 - x)),
        energy: neg_energy,
        laplacian_energy: Some(neg_energy),
    };
    let positive = ClosedForms {
        adjacency: pos_adj,
        laplacian: Some(pos_lap),
        energy: pos_energy,
        laplacian_energy: Some(pos_energy),
    };
    Ok(HomogeneousLineSpectra { positive, negative, unsigned })
}

/// `E(Λ(+K_n)) = 2(n − 1)(n − 2)`.
pub fn complete_plus_line_energy(n: usize) -> f64 {
    let n = n as f64;
    (2.0 * (n - 1.0) * (n - 2.0)).abs()
}

/// `E(Λ(−K_n)) = 2(n − 2) + (n − 1)|n − 4| + n(n − 3)` for `n ≥ 3`.
pub fn complete_minus_line_energy(n: usize) -> f64 {
    let n = n as f64;
    2.0 * (n - 2.0) + (n - 1.0) * (n - 4.0).abs() + n * (n - 3.0)
}

/// Closed forms as they commonly appear in print. Several carry slips (wrong
/// cosine arguments, a sign flip, miscounted multiplicities); they are kept so
/// the verification suites can report each one against the solver.
pub mod variants {
    use super::*;

    /// `E_L(P_m × P_n) = 2ΣΣ|cos πi/m + cos πj/n − 1/m − 1/n|`.
    pub fn grid_laplacian_energy(m: usize, n: usize) -> f64 {
        2.0 * double_sum(m, n, |i, j| {
            ((PI * i as f64 / m as f64).cos() + (PI * j as f64 / n as f64).cos() - 1.0 / m as f64 - 1.0 / n as f64)
                .abs()
        })
    }

    fn cyl_adj(m: usize, r1: usize, n: usize, i: usize, j: usize) -> f64 {
        cycle_cos(i, r1, m) + (2.0 * j as f64 * PI / (n + 1) as f64).cos()
    }

    fn cyl_lap(m: usize, r1: usize, n: usize, i: usize, j: usize) -> f64 {
        -cycle_cos(i, r1, m) + (2.0 * j as f64 * PI / n as f64).cos()
    }

    /// Cylinder adjacency `2(cos θ_i + cos 2jπ/(n+1))`.
    pub fn cylinder_spectrum(m: usize, r1: usize, n: usize) -> ClosedFormSpectrum {
        indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * cyl_adj(m, r1, n, i, j))
    }

    pub fn cylinder_energy(m: usize, r1: usize, n: usize) -> f64 {
        2.0 * double_sum(m, n, |i, j| cyl_adj(m, r1, n, i, j).abs())
    }

    /// Cylinder Laplacian `2(2 − cos θ_i + cos 2jπ/n)`.
    pub fn cylinder_laplacian_spectrum(m: usize, r1: usize, n: usize) -> ClosedFormSpectrum {
        indexed_2d(SpectrumKind::Laplacian, m, n, |i, j| 2.0 * (2.0 + cyl_lap(m, r1, n, i, j)))
    }

    /// `2ΣΣ|1 − 1/n − cos θ_i + cos 2jπ/n|`.
    pub fn cylinder_laplacian_energy(m: usize, r1: usize, n: usize) -> f64 {
        2.0 * double_sum(m, n, |i, j| (1.0 - 1.0 / n as f64 + cyl_lap(m, r1, n, i, j)).abs())
    }

    /// Line grid `2 − 2(cos πi/m + cos πj/n)` plus `2 ×((m−1)(n−1) − 1)`.
    pub fn line_grid_spectrum(m: usize, n: usize) -> ClosedFormSpectrum {
        let c = |i: usize, j: usize| (PI * i as f64 / m as f64).cos() + (PI * j as f64 / n as f64).cos();
        indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 - 2.0 * c(i, j))
            .with_additional(2.0, (signed(m) - 1) * (signed(n) - 1) - 1)
    }

    /// `2ΣΣ|−1 + cos πi/m + cos πj/n| + 2(m−1)(n−1) − 2`.
    pub fn line_grid_energy(m: usize, n: usize) -> f64 {
        let c = |i: usize, j: usize| (PI * i as f64 / m as f64).cos() + (PI * j as f64 / n as f64).cos();
        2.0 * double_sum(m, n, |i, j| (c(i, j) - 1.0).abs()) + 2.0 * ((m as f64 - 1.0) * (n as f64 - 1.0)) - 2.0
    }

    /// Line cylinder `2(cos θ_i − cos 2jπ/n − 1)` plus `2 ×m(n − 1)`.
    pub fn line_cylinder_spectrum(m: usize, r1: usize, n: usize) -> ClosedFormSpectrum {
        let c = |i: usize, j: usize| cycle_cos(i, r1, m) - (2.0 * j as f64 * PI / n as f64).cos();
        indexed_2d(SpectrumKind::Adjacency, m, n, |i, j| 2.0 * (c(i, j) - 1.0))
            .with_additional(2.0, signed(m) * (signed(n) - 1))
    }

    /// `2ΣΣ|1 − cos θ_i + cos 2jπ/n| + 2m(n − 1)`.
    pub fn line_cylinder_energy(m: usize, r1: usize, n: usize) -> f64 {
        let c = |i: usize, j: usize| cycle_cos(i, r1, m) - (2.0 * j as f64 * PI / n as f64).cos();
        2.0 * double_sum(m, n, |i, j| (1.0 - c(i, j)).abs()) + 2.0 * (m * (n - 1)) as f64
    }

    /// `4mn + 2ΣΣ|cos θ_i + cos φ_j − 1|`.
    pub fn line_torus_energy(m: usize, r1: usize, n: usize, r2: usize) -> f64 {
        let s = |i: usize, j: usize| cycle_cos(i, r1, m) + cycle_cos(j, r2, n);
        4.0 * (m * n) as f64 + 2.0 * double_sum(m, n, |i, j| (s(i, j) - 1.0).abs())
    }

    /// Regular Cartesian line graph with `n(k − 2)` additional eigenvalues `2`.
    pub fn line_spectrum_cartesian_regular(factor_adjacency: &[Spectrum], degrees: &[usize]) -> Result<ClosedForms> {
        let correct = super::line_spectrum_cartesian_regular(factor_adjacency, degrees)?;
        let n: usize = factor_adjacency.iter().map(Spectrum::len).product();
        let k: i64 = degrees.iter().sum::<usize>() as i64;
        let printed_extra = n as i64 * (k - 2);
        let rebuild = |s: &ClosedFormSpectrum, v: f64| {
            let mut out = ClosedFormSpectrum::new(s.kind());
            for (ix, x) in s.indexed() {
                out.push(ix.clone(), *x);
            }
            out.with_additional(v, printed_extra)
        };
        let kf = k as f64;
        let indexed_energy: f64 = correct.adjacency.indexed().iter().map(|x| x.1.abs()).sum();
        let energy = indexed_energy + 2.0 * printed_extra as f64;
        Ok(ClosedForms {
            adjacency: rebuild(&correct.adjacency, 2.0),
            laplacian: correct.laplacian.as_ref().map(|l| rebuild(l, 2.0 * kf - 4.0)),
            energy,
            laplacian_energy: Some(energy),
        })
    }

    fn counted(kind: SpectrumKind, parts: &[(f64, i64)]) -> ClosedFormSpectrum {
        let mut s = ClosedFormSpectrum::new(kind);
        for &(v, c) in parts {
            s.add(v, c);
        }
        s
    }

    /// `Λ(+K_n)`: `3 − n ×(n−1)`, `2 ×C(n−1,2)`.
    pub fn complete_plus_line_spectrum(n: usize) -> ClosedFormSpectrum {
        let (nf, ni) = (n as f64, n as i64);
        counted(SpectrumKind::Adjacency, &[(3.0 - nf, ni - 1), (2.0, binom2(ni - 1))])
    }

    /// `Λ(+K_n)` Laplacian: `3n − 7 ×(n−1)`, `2n − 6 ×C(n−1,2)`.
    pub fn complete_plus_line_laplacian(n: usize) -> ClosedFormSpectrum {
        let (nf, ni) = (n as f64, n as i64);
        counted(SpectrumKind::Laplacian, &[(3.0 * nf - 7.0, ni - 1), (2.0 * nf - 6.0, binom2(ni - 1))])
    }

    /// `E(Λ(+K_n)) = (n − 1)(2n − 5)`.
    pub fn complete_plus_line_energy(n: usize) -> f64 {
        let n = n as f64;
        (n - 1.0) * (2.0 * n - 5.0)
    }

    /// `Λ(−K_n)`: `−2(n−2) ×1`, `−(n−3) ×(n−1)`, `2 ×(C(n−1,2) − 1)`.
    pub fn complete_minus_line_spectrum(n: usize) -> ClosedFormSpectrum {
        let (nf, ni) = (n as f64, n as i64);
        counted(
            SpectrumKind::Adjacency,
            &[(-2.0 * (nf - 2.0), 1), (-(nf - 3.0), ni - 1), (2.0, binom2(ni - 1) - 1)],
        )
    }

    /// `Λ(−K_n)` Laplacian: `4n − 8 ×1`, `3n − 7 ×(n−1)`, `2n − 6 ×(C(n−1,2) − 1)`.
    pub fn complete_minus_line_laplacian(n: usize) -> ClosedFormSpectrum {
        let (nf, ni) = (n as f64, n as i64);
        counted(
            SpectrumKind::Laplacian,
            &[(4.0 * nf - 8.0, 1), (3.0 * nf - 7.0, ni - 1), (2.0 * nf - 6.0, binom2(ni - 1) - 1)],
        )
    }

    /// `E(Λ(−K_n)) = (n − 1)(2n − 5) + 2(n − 3)`.
    pub fn complete_minus_line_energy(n: usize) -> f64 {
        complete_plus_line_energy(n) + 2.0 * (n as f64 - 3.0)
    }

    /// Unsigned `Λ(K_n)`: `2(n−2) ×1`, `n − 3 ×(n−1)`, `−2 ×(C(n−1,2) − 1)`.
    pub fn complete_unsigned_line_spectrum(n: usize) -> ClosedFormSpectrum {
        complete_minus_line_spectrum(n).negated()
    }

    /// Unsigned `Λ(K_n)` Laplacian: `2 ×1`, `n + 1 ×(n−1)`, `2n ×(C(n−1,2) − 1)`.
    pub fn complete_unsigned_line_laplacian(n: usize) -> ClosedFormSpectrum {
        let (nf, ni) = (n as f64, n as i64);
        counted(SpectrumKind::Laplacian, &[(2.0, 1), (nf + 1.0, ni - 1), (2.0 * nf, binom2(ni - 1) - 1)])
    }
}
