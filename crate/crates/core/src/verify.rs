//! Property suites that pit the constructions and closed forms against the
//! eigensolver and the brute-force oracles.
//!
//! Each suite returns a [`SuiteReport`] with per-property pass/fail counts.
//! Disagreements between commonly printed closed forms and the solver are
//! reported as findings; they do not fail the suite, because each is also
//! checked against the general theorem it specialises.
//!
//! `max` means, per suite:
//!
//! | suite | `max` bounds | default |
//! |-------|--------------|---------|
//! | `kirchhoff`, `rank`, `acharya`, `line-theorems` | order of corpus graphs | 8 |
//! | `closed-forms` | family parameters `m`, `n` (1-D families go two further) | 6 |
//! | `neps-matrix`, `energy-bounds` | order of the product graph | 64 |

use std::fmt;

use serde::Serialize;

use crate::balance::balance_report;
use crate::error::{Error, Result};
use crate::families::{complete, cycle, cylinder, grid, path, torus};
use crate::formulas::{self, variants, ClosedFormSpectrum, ClosedForms};
use crate::graph::{Sign, SignedGraph};
use crate::linegraph::line_graph;
use crate::matrix::SymMatrix;
use crate::oracle;
use crate::products::{self, Basis};
use crate::random;
use crate::spectra::{self, laplacian_energy_of, Spectrum, CLOSED_FORM_TOL};

pub const SUITES: [&str; 7] =
    ["acharya", "closed-forms", "energy-bounds", "kirchhoff", "line-theorems", "neps-matrix", "rank"];

/// Tolerance for energies computed two ways.
pub const ENERGY_TOL: f64 = 1e-7;
/// Slack for inequalities between floating-point energies.
pub const BOUND_SLACK: f64 = 1e-9;

pub const NEPS_COMBINATIONS: usize = 200;
pub const BALANCE_FACTOR_SETS: usize = 100;
const LINE_CARTESIAN_MAX_ORDER: usize = 16;
const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max: None, seed: random::DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// Up to a handful of failing instances.
    pub examples: Vec<String>,
}

/// A printed closed form checked against the solver.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub formula: String,
    pub instances: usize,
    pub mismatches: usize,
    pub example: Option<String>,
    /// Whether the general theorem reproduces the solver on every instance.
    pub general_theorem_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
    pub findings: Vec<Finding>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }

    pub fn total_failed(&self) -> usize {
        self.properties.iter().map(|p| p.failed).sum()
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, if self.passed() { "PASS" } else { "FAIL" })?;
        for p in &self.properties {
            writeln!(f, "  {:<48} {:>6} passed {:>4} failed", p.name, p.passed, p.failed)?;
            for e in &p.examples {
                writeln!(f, "      {e}")?;
            }
        }
        for x in &self.findings {
            let verdict = if x.mismatches == 0 { "agrees".to_string() } else { format!("{} of {} differ", x.mismatches, x.instances) };
            writeln!(f, "  finding: {}: {verdict}", x.formula)?;
            if let Some(e) = &x.example {
                writeln!(f, "      e.g. {e}")?;
            }
            if x.mismatches > 0 {
                let g = if x.general_theorem_agrees { "agrees" } else { "DISAGREES" };
                writeln!(f, "      general theorem {g} with the solver on these instances")?;
            }
        }
        Ok(())
    }
}

struct Tally {
    result: PropertyResult,
}

impl Tally {
    fn new(name: &str) -> Self {
        Self { result: PropertyResult { name: name.to_string(), passed: 0, failed: 0, examples: Vec::new() } }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.result.passed += 1;
        } else {
            self.result.failed += 1;
            if self.result.examples.len() < MAX_EXAMPLES {
                self.result.examples.push(detail());
            }
        }
    }

    fn done(self) -> PropertyResult {
        self.result
    }
}

struct FindingTally {
    finding: Finding,
}

impl FindingTally {
    fn new(formula: &str) -> Self {
        Self {
            finding: Finding {
                formula: formula.to_string(),
                instances: 0,
                mismatches: 0,
                example: None,
                general_theorem_agrees: true,
            },
        }
    }

    fn record(&mut self, ok: bool, general_ok: bool, detail: impl FnOnce() -> String) {
        self.finding.instances += 1;
        if !ok {
            self.finding.mismatches += 1;
            self.finding.general_theorem_agrees &= general_ok;
            if self.finding.example.is_none() {
                self.finding.example = Some(detail());
            }
        }
    }
}

/// Runs one suite by name.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<SuiteReport> {
    let properties_and_findings = match name {
        "kirchhoff" => (kirchhoff(config)?, Vec::new()),
        "rank" => (rank(config)?, Vec::new()),
        "acharya" => (acharya(config)?, Vec::new()),
        "neps-matrix" => (neps_matrix(config)?, Vec::new()),
        "energy-bounds" => (energy_bounds(config)?, Vec::new()),
        "closed-forms" => closed_forms(config)?,
        "line-theorems" => (line_theorems(config)?, Vec::new()),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        properties: properties_and_findings.0,
        findings: properties_and_findings.1,
    })
}

/// Every suite, in name order.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, config)).collect()
}

fn corpus(config: &VerifyConfig) -> Vec<SignedGraph> {
    random::corpus(config.seed, random::CORPUS_SIZE, config.max.unwrap_or(random::CORPUS_MAX_ORDER))
}

fn describe(g: &SignedGraph) -> String {
    crate::io::to_json_string(g)
}

// ---------------------------------------------------------------- kirchhoff

fn kirchhoff(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let mut hht = Tally::new("H·Hᵀ == L");
    let mut columns = Tally::new("incidence column signs");
    let mut line = Tally::new("A(Λ) == 2I − HᵀH");
    for g in corpus(config) {
        let h = g.incidence();
        hht.check(h.kirchhoff() == g.laplacian(), || describe(&g));
        let ok = g.edges().iter().enumerate().all(|(k, e)| {
            let nonzero = (0..g.order()).filter(|&v| h.get(v, k) != 0).count();
            nonzero == 2 && h.get(e.u, k) * h.get(e.v, k) == -e.sign.value()
        });
        columns.check(ok, || describe(&g));
        let m = g.size();
        let expected = SymMatrix::identity(m).scale(2).try_sub(&h.gram())?;
        line.check(line_graph(&g).graph.adjacency() == expected, || describe(&g));
    }
    Ok(vec![hht.done(), columns.done(), line.done()])
}

// ---------------------------------------------------------------- rank

fn rank(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let mut law = Tally::new("rank L == n − b");
    let mut zero_mult = Tally::new("multiplicity of 0 in L == b");
    let mut cycles = Tally::new("balance agrees with cycle oracle");
    let mut switching = Tally::new("b agrees with switching oracle");
    let mut homogeneous = Tally::new("b(+G) == c, b(−G) == c_b");
    let mut excess = Tally::new("b(Σ) + b(−Σ) ≤ n without isolated vertices");
    let mut both = Tally::new("Σ and −Σ balanced ⇒ bipartite");
    let mut certificate = Tally::new("certificate switches to all-positive");
    for g in corpus(config) {
        let report = balance_report(&g);
        let n = g.order();
        let b = report.b();
        law.check(oracle::rank_exact(g.laplacian().as_matrix()) == n - b, || describe(&g));
        zero_mult.check(spectra::laplacian_spectrum(&g)?.multiplicity(0.0) == b, || describe(&g));
        if n <= oracle::CYCLE_ENUMERATION_CAP {
            let o = oracle::balance_by_cycles(&g)?;
            let agree = o.components.len() == report.c()
                && o.components.iter().zip(&report.components).all(|(a, c)| a.0 == c.vertices && a.1 == c.balanced);
            cycles.check(agree, || describe(&g));
        }
        if n <= oracle::SWITCHING_CAP {
            switching.check(oracle::balanced_components_by_switching(&g)? == b, || describe(&g));
        }
        let pos = balance_report(&g.underlying());
        let neg_report = balance_report(&g.underlying().negate());
        homogeneous.check(pos.b() == pos.c() && neg_report.b() == neg_report.c_b(), || describe(&g));
        let minus = balance_report(&g.negate());
        if g.degrees().iter().all(|&d| d > 0) {
            excess.check(b + minus.b() <= n, || describe(&g));
        }
        if report.is_balanced() && minus.is_balanced() {
            both.check(report.c_b() == report.c(), || describe(&g));
        }
        if let Some(s) = report.certificate() {
            certificate.check(g.switch(&s)?.is_all_positive(), || describe(&g));
        }
    }
    Ok(vec![
        law.done(),
        zero_mult.done(),
        cycles.done(),
        switching.done(),
        homogeneous.done(),
        excess.done(),
        both.done(),
        certificate.done(),
    ])
}

// ---------------------------------------------------------------- acharya

fn acharya(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let mut criterion = Tally::new("balanced ⇔ same spectrum as underlying graph");
    let mut switch_inv = Tally::new("switching preserves the spectrum");
    let mut negation = Tally::new("spectrum(−Σ) == −spectrum(Σ)");
    let mut trace = Tally::new("Σλ == 0 and Σλ² == ‖A‖²");
    let mut psd = Tally::new("Laplacian is positive semidefinite");
    let mut ladder = Tally::new("regular: λ^L == k − λ, E_L == E, multiplicities");
    let mut rng = random::rng(config.seed ^ 0xac);
    for g in corpus(config) {
        let s = spectra::spectrum(&g)?;
        let same = s.matches(&spectra::spectrum(&g.underlying())?, CLOSED_FORM_TOL);
        criterion.check(same == balance_report(&g).is_balanced(), || describe(&g));

        let switched = g.switch(&random::switching(&mut rng, g.order()))?;
        switch_inv.check(spectra::spectrum(&switched)?.matches(&s, CLOSED_FORM_TOL), || describe(&g));
        negation.check(spectra::spectrum(&g.negate())?.matches(&s.negated(), CLOSED_FORM_TOL), || describe(&g));

        let fro = g.adjacency().as_matrix().frobenius_sq() as f64;
        let scale = fro.sqrt().max(1.0);
        trace.check(
            s.sum().abs() <= CLOSED_FORM_TOL * scale && (s.sum_squares() - fro).abs() <= CLOSED_FORM_TOL * scale * scale,
            || describe(&g),
        );
        let ls = spectra::laplacian_spectrum(&g)?;
        psd.check(ls.min().unwrap_or(0.0) >= -CLOSED_FORM_TOL, || describe(&g));

        if let Some(k) = g.regular_degree() {
            ladder.check(regular_ladder_holds(&g, k, &s, &ls), || describe(&g));
        }
    }
    for g in regular_family_instances(config.max.unwrap_or(random::CORPUS_MAX_ORDER).max(6))? {
        let k = g.regular_degree().expect("regular family");
        let s = spectra::spectrum(&g)?;
        let ls = spectra::laplacian_spectrum(&g)?;
        ladder.check(regular_ladder_holds(&g, k, &s, &ls), || describe(&g));
    }
    Ok(vec![criterion.done(), switch_inv.done(), negation.done(), trace.done(), psd.done(), ladder.done()])
}

/// `λ^L == k − λ` as multisets, `E_L == E`, `mult(k) == b(Σ)`, `mult(−k) == b(−Σ)`.
pub fn regular_ladder_holds(g: &SignedGraph, k: usize, s: &Spectrum, ls: &Spectrum) -> bool {
    let kf = k as f64;
    let shifted = s.negated().shifted(kf);
    let el = laplacian_energy_of(ls, g.average_degree());
    ls.matches(&shifted, CLOSED_FORM_TOL)
        && (el - s.sum_abs()).abs() <= ENERGY_TOL
        && (k == 0
            || (s.multiplicity(kf) == balance_report(g).b()
                && s.multiplicity(-kf) == balance_report(&g.negate()).b()))
}

/// Cycles, tori and ±K_n up to the given order parameter.
pub fn regular_family_instances(max: usize) -> Result<Vec<SignedGraph>> {
    let mut out = Vec::new();
    for n in 3..=max + 2 {
        for r in r_values(n) {
            out.push(cycle(n, r)?);
        }
    }
    for m in 3..=max.min(6) {
        for n in 3..=max.min(6) {
            for r1 in r_values(m) {
                for r2 in r_values(n) {
                    out.push(torus(m, r1, n, r2)?);
                }
            }
        }
    }
    for n in 1..=max + 2 {
        out.push(complete(n, Sign::Positive)?);
        out.push(complete(n, Sign::Negative)?);
    }
    Ok(out)
}

/// Representative negative-edge counts `0..=max_r`: both parities and the
/// extreme.
fn r_values(max_r: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [0, 1, max_r].into_iter().filter(|&r| r <= max_r).collect();
    v.dedup();
    v
}

// ---------------------------------------------------------------- neps-matrix

fn neps_matrix(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let max_order = config.max.unwrap_or(64);
    let mut matrix = Tally::new("A(NEPS) == Σ_β ⊗A_i^β_i");
    let mut degree = Tally::new("D(NEPS) == Σ_β ⊗D_i^β_i");
    let mut avg = Tally::new("average degree == Σ_β ∏ d̄_i");
    let mut disjoint = Tally::new("β-products are edge-disjoint");
    let mut eigen = Tally::new("eigenvalues == Σ_β ∏ λ_ij^β_i");
    let mut negation = Tally::new("negated factors under B_p give (−1)^p A");
    let mut positive = Tally::new("all-positive factors give all-positive product");
    let mut sufficient = Tally::new("balanced factors ⇒ balanced product");
    let mut necessary = Tally::new("e_i ∈ B and Σ_i unbalanced ⇒ unbalanced");
    let mut lap = Tally::new("L(Cartesian) == Σ_i I⊗L_i⊗I");
    let mut cart_bal = Tally::new("Cartesian balanced ⇔ factors balanced");
    let mut multiplicative = Tally::new("b(Cartesian) == ∏ b(Σ_i)");
    let mut counterexample = Tally::new("strong(−C_odd, +K_2) balanced");

    let mut rng = random::rng(config.seed ^ 0x4e);
    for _ in 0..NEPS_COMBINATIONS {
        let factors = random::factor_set(&mut rng, 3, max_order);
        let basis = random::basis(&mut rng, factors.len());
        let label = || format!("basis {basis}, factors {:?}", factors.iter().map(describe).collect::<Vec<_>>());
        let product = products::neps(&factors, &basis)?;
        let adjs: Vec<SymMatrix> = factors.iter().map(SignedGraph::adjacency).collect();
        matrix.check(product.adjacency() == products::kron_sum_over_basis(&adjs, &basis)?, label);
        degree.check(product.degree_matrix() == products::neps_degree_matrix(&factors, &basis)?, label);
        let d = products::average_degree(&factors, &basis)?;
        avg.check((d - product.average_degree()).abs() <= 1e-9, label);
        let per_beta: usize = basis.iter().map(|beta| products::neps_single(&factors, beta).len()).sum();
        disjoint.check(per_beta == product.size(), label);

        let factor_spectra: Vec<Spectrum> = factors.iter().map(spectra::spectrum).collect::<Result<_>>()?;
        let predicted = Spectrum::from_values(neps_eigenvalues(&factor_spectra, &basis));
        eigen.check(spectra::spectrum(&product)?.matches(&predicted, CLOSED_FORM_TOL), label);

        if let Some(p) = basis.uniform_weight() {
            let negated: Vec<SignedGraph> = factors.iter().map(SignedGraph::negate).collect();
            let a = products::neps(&negated, &basis)?.adjacency();
            let expected = if p % 2 == 1 { product.adjacency().scale(-1) } else { product.adjacency() };
            negation.check(a == expected, label);
        }
        let underlying: Vec<SignedGraph> = factors.iter().map(SignedGraph::underlying).collect();
        positive.check(products::neps(&underlying, &basis)?.is_all_positive(), label);

        let factor_balanced: Vec<bool> = factors.iter().map(|f| balance_report(f).is_balanced()).collect();
        let product_balanced = balance_report(&product).is_balanced();
        if factor_balanced.iter().all(|&b| b) {
            sufficient.check(product_balanced, label);
        }
        if (0..factors.len()).any(|i| basis.contains_unit(i) && !factor_balanced[i]) {
            necessary.check(!product_balanced, label);
        }
        let cart = products::cartesian(&factors)?;
        lap.check(cart.laplacian() == products::cartesian_laplacian(&factors)?, label);
        cart_bal.check(balance_report(&cart).is_balanced() == factor_balanced.iter().all(|&b| b), label);
    }

    let mut rng = random::rng(config.seed ^ 0xb1);
    for _ in 0..BALANCE_FACTOR_SETS {
        let factors = random::factor_set(&mut rng, 3, max_order);
        let expected: usize = factors.iter().map(|f| balance_report(f).b()).product();
        let got = balance_report(&products::cartesian(&factors)?).b();
        multiplicative.check(got == expected, || format!("{:?}", factors.iter().map(describe).collect::<Vec<_>>()));
    }

    for n in [3, 5, 7] {
        let neg = cycle(n, 0)?.negate();
        let k2 = path(2, 0)?;
        let s = products::neps(&[neg.clone(), k2], &Basis::strong(2)?)?;
        counterexample.check(
            balance_report(&s).is_balanced() && !balance_report(&neg).is_balanced(),
            || format!("n = {n}"),
        );
    }

    Ok(vec![
        matrix.done(),
        degree.done(),
        avg.done(),
        disjoint.done(),
        eigen.done(),
        negation.done(),
        positive.done(),
        sufficient.done(),
        necessary.done(),
        lap.done(),
        cart_bal.done(),
        multiplicative.done(),
        counterexample.done(),
    ])
}

/// `Σ_β ∏_i λ_{ij_i}^{β_i}` over all index tuples, from factor spectra.
pub fn neps_eigenvalues(factor_spectra: &[Spectrum], basis: &Basis) -> Vec<f64> {
    let orders: Vec<usize> = factor_spectra.iter().map(Spectrum::len).collect();
    let map = products::ProductVertexMap::new(orders);
    (0..map.len())
        .map(|flat| {
            let t = map.tuple(flat);
            basis
                .iter()
                .map(|beta| {
                    beta.iter()
                        .zip(&t)
                        .zip(factor_spectra)
                        .filter(|((&b, _), _)| b)
                        .map(|((_, &j), s)| s.values()[j])
                        .product::<f64>()
                })
                .sum()
        })
        .collect()
}

// ---------------------------------------------------------------- energy-bounds

/// `Σ_β ∏_{i: β_i = 1} E(Σ_i)/n_i`.
pub fn neps_energy_bound(factor_energies: &[f64], orders: &[usize], basis: &Basis) -> f64 {
    basis
        .iter()
        .map(|beta| {
            beta.iter()
                .zip(factor_energies.iter().zip(orders))
                .filter(|(&b, _)| b)
                .map(|(_, (&e, &n))| e / n as f64)
                .product::<f64>()
        })
        .sum()
}

fn energy_bounds(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let max_order = config.max.unwrap_or(64);
    let mut bound = Tally::new("E(NEPS)/n ≤ Σ_β ∏ E_i/n_i");
    let mut equality = Tally::new("equality for the strong product");
    let mut strict = Tally::new("strict when |B| > 1 and no factor is edgeless");
    let mut cart_strict = Tally::new("Cartesian strict when ≥ 2 factors have edges");
    let mut lap_bound = Tally::new("E_L(Cartesian)/n ≤ Σ E_L(Σ_i)/n_i");
    let mut lap_strict = Tally::new("Laplacian bound strict iff ≥ 2 factors have edges");

    let mut rng = random::rng(config.seed ^ 0xe6);
    for _ in 0..NEPS_COMBINATIONS {
        let factors = random::factor_set(&mut rng, 3, max_order);
        let label = || format!("{:?}", factors.iter().map(describe).collect::<Vec<_>>());
        let orders: Vec<usize> = factors.iter().map(SignedGraph::order).collect();
        let n: usize = orders.iter().product();
        let energies: Vec<f64> = factors.iter().map(spectra::energy).collect::<Result<_>>()?;
        let with_edges = factors.iter().filter(|f| f.size() > 0).count();

        for basis in [random::basis(&mut rng, factors.len()), Basis::strong(factors.len())?] {
            let e = spectra::energy(&products::neps(&factors, &basis)?)? / n as f64;
            let rhs = neps_energy_bound(&energies, &orders, &basis);
            bound.check(e <= rhs + BOUND_SLACK, || format!("basis {basis}: {e} > {rhs}; {}", label()));
            if basis.len() == 1 && basis.vectors()[0].iter().all(|&b| b) {
                equality.check((e - rhs).abs() <= BOUND_SLACK, || format!("{e} != {rhs}; {}", label()));
            }
            if basis.len() > 1 && with_edges == factors.len() {
                strict.check(e < rhs - BOUND_SLACK, || format!("basis {basis}: {e} == {rhs}; {}", label()));
            }
        }

        let cart = products::cartesian(&factors)?;
        let e = spectra::energy(&cart)? / n as f64;
        let rhs: f64 = energies.iter().zip(&orders).map(|(e, &k)| e / k as f64).sum();
        if factors.len() >= 2 && with_edges >= 2 {
            cart_strict.check(e < rhs - BOUND_SLACK, || format!("{e} == {rhs}; {}", label()));
        }

        let el = spectra::laplacian_energy(&cart)? / n as f64;
        let lap_energies: Vec<f64> = factors.iter().map(spectra::laplacian_energy).collect::<Result<_>>()?;
        let rhs: f64 = lap_energies.iter().zip(&orders).map(|(e, &k)| e / k as f64).sum();
        lap_bound.check(el <= rhs + BOUND_SLACK, || format!("{el} > {rhs}; {}", label()));
        if factors.len() >= 2 && with_edges >= 2 {
            lap_strict.check(el < rhs - BOUND_SLACK, || format!("{el} == {rhs}; {}", label()));
        } else {
            lap_strict.check((el - rhs).abs() <= BOUND_SLACK, || format!("{el} != {rhs}; {}", label()));
        }
    }
    Ok(vec![bound.done(), equality.done(), strict.done(), cart_strict.done(), lap_bound.done(), lap_strict.done()])
}

// ---------------------------------------------------------------- closed-forms

/// Sorted comparison of a closed form with a solver spectrum; `None` when the
/// lengths differ or a deduction cannot be applied.
pub fn closed_form_gap(cf: &ClosedFormSpectrum, solved: &Spectrum) -> Option<f64> {
    let values = cf.values().ok()?;
    Spectrum::from_values(values).max_abs_diff(solved)
}

fn within(gap: Option<f64>, tol: f64) -> bool {
    gap.is_some_and(|d| d <= tol)
}

/// Solver-side data for one graph.
struct Solved {
    adjacency: Spectrum,
    laplacian: Spectrum,
    energy: f64,
    laplacian_energy: f64,
}

impl Solved {
    fn of(g: &SignedGraph) -> Result<Self> {
        let adjacency = spectra::spectrum(g)?;
        let laplacian = spectra::laplacian_spectrum(g)?;
        let energy = adjacency.sum_abs();
        let laplacian_energy = if g.order() == 0 { 0.0 } else { laplacian_energy_of(&laplacian, g.average_degree()) };
        Ok(Self { adjacency, laplacian, energy, laplacian_energy })
    }
}

/// Checks every part of `forms` against `solved`; returns a description of
/// the first mismatch.
fn forms_mismatch(forms: &ClosedForms, solved: &Solved) -> Option<String> {
    let gap = closed_form_gap(&forms.adjacency, &solved.adjacency);
    if !within(gap, CLOSED_FORM_TOL) {
        return Some(format!("adjacency gap {gap:?}"));
    }
    if (forms.energy - solved.energy).abs() > ENERGY_TOL {
        return Some(format!("energy {} vs solver {}", forms.energy, solved.energy));
    }
    if let Some(l) = &forms.laplacian {
        let gap = closed_form_gap(l, &solved.laplacian);
        if !within(gap, CLOSED_FORM_TOL) {
            return Some(format!("Laplacian gap {gap:?}"));
        }
    }
    if let Some(el) = forms.laplacian_energy {
        if (el - solved.laplacian_energy).abs() > ENERGY_TOL {
            return Some(format!("Laplacian energy {el} vs solver {}", solved.laplacian_energy));
        }
    }
    None
}

/// Line graph spectrum and energy from the general theorem, fed by the
/// solver's Laplacian spectrum of `g`.
fn general_line_agrees(g: &SignedGraph, line_solved: &Solved) -> Result<bool> {
    let lap = spectra::laplacian_spectrum(g)?;
    let b = balance_report(g).b();
    let s = formulas::line_spectrum_general(&lap, g.size(), g.order(), b)?;
    let e = formulas::line_energy_general(&lap, g.size(), g.order(), b)?;
    Ok(within(closed_form_gap(&s, &line_solved.adjacency), CLOSED_FORM_TOL)
        && (e - line_solved.energy).abs() <= ENERGY_TOL)
}

/// Cartesian spectra from factor solver spectra: adjacency and Laplacian
/// eigenvalues are sums, `E_L` uses the summed average degree.
fn general_cartesian_agrees(factors: &[SignedGraph], solved: &Solved) -> Result<bool> {
    let basis = Basis::cartesian(factors.len())?;
    let adj: Vec<Spectrum> = factors.iter().map(spectra::spectrum).collect::<Result<_>>()?;
    let lap: Vec<Spectrum> = factors.iter().map(spectra::laplacian_spectrum).collect::<Result<_>>()?;
    let a = Spectrum::from_values(neps_eigenvalues(&adj, &basis));
    let l = Spectrum::from_values(neps_eigenvalues(&lap, &basis));
    let d: f64 = factors.iter().map(SignedGraph::average_degree).sum();
    Ok(a.matches(&solved.adjacency, CLOSED_FORM_TOL)
        && l.matches(&solved.laplacian, CLOSED_FORM_TOL)
        && (a.sum_abs() - solved.energy).abs() <= ENERGY_TOL
        && (laplacian_energy_of(&l, d) - solved.laplacian_energy).abs() <= ENERGY_TOL)
}

/// The sweep behind the `closed-forms` suite; returns properties and
/// findings on printed variants.
fn closed_forms(config: &VerifyConfig) -> Result<(Vec<PropertyResult>, Vec<Finding>)> {
    let max = config.max.unwrap_or(6);
    let long = max + 2;
    let mut props = Vec::new();
    let mut findings: Vec<FindingTally> = Vec::new();
    let mut finding = |name: &str| -> usize {
        findings.push(FindingTally::new(name));
        findings.len() - 1
    };
    let f_grid_el = finding("E_L(P_m × P_n) with −1/m − 1/n");
    let f_cyl_adj = finding("cylinder eigenvalues with cos 2jπ/(n+1)");
    let f_cyl_e = finding("cylinder energy with cos 2jπ/(n+1)");
    let f_cyl_lap = finding("cylinder Laplacian eigenvalues with cos 2jπ/n");
    let f_cyl_el = finding("cylinder Laplacian energy 2ΣΣ|1 − 1/n − cos θ_i + cos 2jπ/n|");
    let f_lgrid = finding("Λ(grid) eigenvalues 2 − 2(cos πi/m + cos πj/n)");
    let f_lgrid_e = finding("E(Λ(grid)) with |−1 + cos πi/m + cos πj/n|");
    let f_lcyl = finding("Λ(cylinder) eigenvalues with cos 2jπ/n");
    let f_lcyl_e = finding("E(Λ(cylinder)) with cos 2jπ/n");
    let f_ltor_e = finding("E(Λ(torus)) = 4mn + 2ΣΣ|…|");
    let f_kp = finding("Λ(+K_n) eigenvalues 3 − n ×(n−1), 2 ×C(n−1,2)");
    let f_kp_l = finding("Λ(+K_n) Laplacian 3n − 7 ×(n−1), 2n − 6 ×C(n−1,2)");
    let f_kp_e = finding("E(Λ(+K_n)) = (n−1)(2n−5)");
    let f_km = finding("Λ(−K_n) eigenvalues −2(n−2), −(n−3) ×(n−1), 2 ×(C(n−1,2)−1)");
    let f_km_l = finding("Λ(−K_n) Laplacian 4n − 8, 3n − 7 ×(n−1), 2n − 6 ×(C(n−1,2)−1)");
    let f_km_e = finding("E(Λ(−K_n)) = (n−1)(2n−5) + 2(n−3)");
    let f_ku = finding("Λ(K_n) eigenvalues 2(n−2), n − 3 ×(n−1), −2 ×(C(n−1,2)−1)");
    let f_ku_l = finding("Λ(K_n) Laplacian 2, n + 1 ×(n−1), 2n ×(C(n−1,2)−1)");
    let f_cr = finding("Λ(Cartesian regular) with n(k − 2) additional eigenvalues 2");

    let spec_ok = |cf: &ClosedFormSpectrum, s: &Spectrum| within(closed_form_gap(cf, s), CLOSED_FORM_TOL);
    let energy_ok = |a: f64, b: f64| (a - b).abs() <= ENERGY_TOL;

    // paths and cycles
    let mut t = Tally::new("paths P_n^(r)");
    for n in 1..=long {
        for r in 0..n {
            let solved = Solved::of(&path(n, r)?)?;
            let m = forms_mismatch(&formulas::path_forms(n), &solved);
            t.check(m.is_none(), || format!("n={n} r={r}: {}", m.clone().unwrap_or_default()));
        }
    }
    props.push(t.done());
    let mut t = Tally::new("cycles C_n^(r)");
    for n in 3..=long {
        for r in 0..=n {
            let solved = Solved::of(&cycle(n, r)?)?;
            let m = forms_mismatch(&formulas::cycle_forms(n, r), &solved);
            t.check(m.is_none(), || format!("n={n} r={r}: {}", m.clone().unwrap_or_default()));
        }
    }
    props.push(t.done());

    // grids
    let mut t = Tally::new("grids P_m × P_n");
    let mut tl = Tally::new("line graphs of grids");
    for m in 1..=max {
        for n in 1..=max {
            for r1 in r_values(m - 1) {
                for r2 in r_values(n - 1) {
                    let g = grid(m, r1, n, r2)?;
                    let solved = Solved::of(&g)?;
                    let mm = forms_mismatch(&formulas::grid_spectra(m, n), &solved);
                    t.check(mm.is_none(), || format!("m={m} r1={r1} n={n} r2={r2}: {}", mm.clone().unwrap_or_default()));
                    let general = general_cartesian_agrees(&[path(m, r1)?, path(n, r2)?], &solved)?;
                    findings[f_grid_el].record(
                        energy_ok(variants::grid_laplacian_energy(m, n), solved.laplacian_energy),
                        general,
                        || format!("m={m} n={n}: {} vs solver {}", variants::grid_laplacian_energy(m, n), solved.laplacian_energy),
                    );

                    let lsolved = Solved::of(&line_graph(&g).graph)?;
                    let mm = forms_mismatch(&formulas::line_grid_spectra(m, n), &lsolved);
                    tl.check(mm.is_none(), || format!("m={m} n={n}: {}", mm.clone().unwrap_or_default()));
                    let general = general_line_agrees(&g, &lsolved)?;
                    findings[f_lgrid].record(spec_ok(&variants::line_grid_spectrum(m, n), &lsolved.adjacency), general, || {
                        format!("m={m} n={n}: gap {:?}", closed_form_gap(&variants::line_grid_spectrum(m, n), &lsolved.adjacency))
                    });
                    findings[f_lgrid_e].record(energy_ok(variants::line_grid_energy(m, n), lsolved.energy), general, || {
                        format!("m={m} n={n}: {} vs solver {}", variants::line_grid_energy(m, n), lsolved.energy)
                    });
                }
            }
        }
    }
    props.push(t.done());
    props.push(tl.done());

    // cylinders
    let mut t = Tally::new("cylinders C_m × P_n");
    let mut tl = Tally::new("line graphs of cylinders");
    for m in 3..=max {
        for n in 1..=max {
            for r1 in r_values(m) {
                for r2 in r_values(n - 1) {
                    let g = cylinder(m, r1, n, r2)?;
                    let solved = Solved::of(&g)?;
                    let mm = forms_mismatch(&formulas::cylinder_spectra(m, r1, n), &solved);
                    t.check(mm.is_none(), || format!("m={m} r1={r1} n={n} r2={r2}: {}", mm.clone().unwrap_or_default()));
                    let general = general_cartesian_agrees(&[cycle(m, r1)?, path(n, r2)?], &solved)?;
                    let at = || format!("m={m} r1={r1} n={n}");
                    findings[f_cyl_adj].record(spec_ok(&variants::cylinder_spectrum(m, r1, n), &solved.adjacency), general, at);
                    findings[f_cyl_e].record(energy_ok(variants::cylinder_energy(m, r1, n), solved.energy), general, || {
                        format!("{}: {} vs solver {}", at(), variants::cylinder_energy(m, r1, n), solved.energy)
                    });
                    findings[f_cyl_lap].record(
                        spec_ok(&variants::cylinder_laplacian_spectrum(m, r1, n), &solved.laplacian),
                        general,
                        at,
                    );
                    findings[f_cyl_el].record(
                        energy_ok(variants::cylinder_laplacian_energy(m, r1, n), solved.laplacian_energy),
                        general,
                        || format!("{}: {} vs solver {}", at(), variants::cylinder_laplacian_energy(m, r1, n), solved.laplacian_energy),
                    );

                    let lsolved = Solved::of(&line_graph(&g).graph)?;
                    let mm = forms_mismatch(&formulas::line_cylinder_spectra(m, r1, n), &lsolved);
                    tl.check(mm.is_none(), || format!("{}: {}", at(), mm.clone().unwrap_or_default()));
                    let general = general_line_agrees(&g, &lsolved)?;
                    findings[f_lcyl].record(spec_ok(&variants::line_cylinder_spectrum(m, r1, n), &lsolved.adjacency), general, at);
                    findings[f_lcyl_e].record(energy_ok(variants::line_cylinder_energy(m, r1, n), lsolved.energy), general, || {
                        format!("{}: {} vs solver {}", at(), variants::line_cylinder_energy(m, r1, n), lsolved.energy)
                    });
                }
            }
        }
    }
    props.push(t.done());
    props.push(tl.done());

    // tori
    let mut t = Tally::new("tori C_m × C_n");
    let mut tl = Tally::new("line graphs of tori");
    let mut tcr = Tally::new("line graphs of tori via the Cartesian theorems");
    for m in 3..=max {
        for n in 3..=max {
            for r1 in r_values(m) {
                for r2 in r_values(n) {
                    let g = torus(m, r1, n, r2)?;
                    let at = || format!("m={m} r1={r1} n={n} r2={r2}");
                    let solved = Solved::of(&g)?;
                    let mm = forms_mismatch(&formulas::torus_spectra(m, r1, n, r2), &solved);
                    t.check(mm.is_none(), || format!("{}: {}", at(), mm.clone().unwrap_or_default()));

                    let lsolved = Solved::of(&line_graph(&g).graph)?;
                    let mm = forms_mismatch(&formulas::line_torus_spectra(m, r1, n, r2), &lsolved);
                    tl.check(mm.is_none(), || format!("{}: {}", at(), mm.clone().unwrap_or_default()));
                    let general = general_line_agrees(&g, &lsolved)?;
                    findings[f_ltor_e].record(
                        energy_ok(variants::line_torus_energy(m, r1, n, r2), lsolved.energy),
                        general,
                        || format!("{}: {} vs solver {}", at(), variants::line_torus_energy(m, r1, n, r2), lsolved.energy),
                    );

                    let fa = [formulas::cycle_spectrum(m, r1).to_spectrum()?, formulas::cycle_spectrum(n, r2).to_spectrum()?];
                    let fl = [
                        formulas::cycle_laplacian_spectrum(m, r1).to_spectrum()?,
                        formulas::cycle_laplacian_spectrum(n, r2).to_spectrum()?,
                    ];
                    let bf = [usize::from(r1 % 2 == 0), usize::from(r2 % 2 == 0)];
                    let via_cart = formulas::line_spectrum_cartesian(&fl, &bf, 4.0, m * n)?;
                    let via_reg = formulas::line_spectrum_cartesian_regular(&fa, &[2, 2])?;
                    let ok = forms_mismatch(&via_cart, &lsolved).is_none() && forms_mismatch(&via_reg, &lsolved).is_none();
                    tcr.check(ok, at);
                    let printed = variants::line_spectrum_cartesian_regular(&fa, &[2, 2])?;
                    findings[f_cr].record(forms_mismatch(&printed, &lsolved).is_none(), general, || {
                        format!("{}: {}", at(), forms_mismatch(&printed, &lsolved).unwrap_or_default())
                    });
                }
            }
        }
    }
    props.push(t.done());
    props.push(tl.done());
    props.push(tcr.done());

    // ±K_n line graphs
    let mut tp = Tally::new("Λ(+K_n)");
    let mut tm = Tally::new("Λ(−K_n)");
    let mut tu = Tally::new("Λ(K_n) unsigned");
    for n in 1..=long {
        let h = formulas::complete_line_spectra(n)?;
        let kp = complete(n, Sign::Positive)?;
        let km = complete(n, Sign::Negative)?;
        let lp = line_graph(&kp).graph;
        let lm = line_graph(&km).graph;
        let lu = lm.negate();
        let (sp, sm, su) = (Solved::of(&lp)?, Solved::of(&lm)?, Solved::of(&lu)?);
        let mm = forms_mismatch(&h.positive, &sp);
        tp.check(mm.is_none(), || format!("n={n}: {}", mm.clone().unwrap_or_default()));
        let mm = forms_mismatch(&h.negative, &sm);
        tm.check(mm.is_none(), || format!("n={n}: {}", mm.clone().unwrap_or_default()));
        let mm = forms_mismatch(&h.unsigned, &su);
        tu.check(mm.is_none(), || format!("n={n}: {}", mm.clone().unwrap_or_default()));

        if n >= 3 {
            let gp = general_line_agrees(&kp, &sp)?;
            let gm = general_line_agrees(&km, &sm)?;
            let gu = gm && su.adjacency.matches(&sm.adjacency.negated(), CLOSED_FORM_TOL);
            let at = |got: f64, want: f64| move || format!("n={n}: printed {got}, solver {want}");
            let gap = |cf: ClosedFormSpectrum, s: &Spectrum| {
                let g = closed_form_gap(&cf, s);
                (within(g, CLOSED_FORM_TOL), move || format!("n={n}: gap {g:?}"))
            };
            let (ok, d) = gap(variants::complete_plus_line_spectrum(n), &sp.adjacency);
            findings[f_kp].record(ok, gp, d);
            let (ok, d) = gap(variants::complete_plus_line_laplacian(n), &sp.laplacian);
            findings[f_kp_l].record(ok, gp, d);
            findings[f_kp_e].record(
                energy_ok(variants::complete_plus_line_energy(n), sp.energy),
                gp,
                at(variants::complete_plus_line_energy(n), sp.energy),
            );
            let (ok, d) = gap(variants::complete_minus_line_spectrum(n), &sm.adjacency);
            findings[f_km].record(ok, gm, d);
            let (ok, d) = gap(variants::complete_minus_line_laplacian(n), &sm.laplacian);
            findings[f_km_l].record(ok, gm, d);
            findings[f_km_e].record(
                energy_ok(variants::complete_minus_line_energy(n), sm.energy),
                gm,
                at(variants::complete_minus_line_energy(n), sm.energy),
            );
            let (ok, d) = gap(variants::complete_unsigned_line_spectrum(n), &su.adjacency);
            findings[f_ku].record(ok, gu, d);
            let (ok, d) = gap(variants::complete_unsigned_line_laplacian(n), &su.laplacian);
            findings[f_ku_l].record(ok, gu, d);
        }
    }
    props.push(tp.done());
    props.push(tm.done());
    props.push(tu.done());

    let findings = findings.into_iter().map(|f| f.finding).collect();
    Ok((props, findings))
}

// ---------------------------------------------------------------- line-theorems

fn line_theorems(config: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let max = config.max.unwrap_or(random::CORPUS_MAX_ORDER);
    let mut general = Tally::new("spectrum(Λ) == {2 − λ^L > 0} ∪ 2^(m−n+b)");
    let mut energy = Tally::new("E(Λ) == Σ|λ^L − 2| + 2(m−n+b)");
    let mut upper = Tally::new("eigenvalues of Λ are ≤ 2");
    let mut negation = Tally::new("spectrum(Λ(−G)) == −spectrum(Λ(G))");
    let mut homogeneous = Tally::new("homogeneous Λ(+G), Λ(−G), Λ(G)");
    let mut regular = Tally::new("regular: λ − k + 2, 3k − 4 − λ, E == E_L");
    let mut cycles = Tally::new("Λ(C_n^(r)) is a cycle of sign (−1)^r");
    let mut cartesian = Tally::new("Λ(Cartesian) from factor Laplacians");

    for g in corpus(config) {
        let lg = line_graph(&g).graph;
        let solved = Solved::of(&lg)?;
        let lap = spectra::laplacian_spectrum(&g)?;
        let report = balance_report(&g);
        let (m, n) = (g.size(), g.order());
        let s = formulas::line_spectrum_general(&lap, m, n, report.b())?;
        general.check(within(closed_form_gap(&s, &solved.adjacency), CLOSED_FORM_TOL), || describe(&g));
        let e = formulas::line_energy_general(&lap, m, n, report.b())?;
        energy.check((e - solved.energy).abs() <= ENERGY_TOL, || describe(&g));
        upper.check(solved.adjacency.max().unwrap_or(0.0) <= 2.0 + CLOSED_FORM_TOL, || describe(&g));

        let u = g.underlying();
        let classical = line_graph(&u).graph.underlying();
        let neg_line = line_graph(&u.negate()).graph;
        let classical_s = spectra::spectrum(&classical)?;
        let neg_s = spectra::spectrum(&neg_line)?;
        negation.check(neg_s.matches(&classical_s.negated(), CLOSED_FORM_TOL), || describe(&g));

        let ur = balance_report(&u);
        let h = formulas::homogeneous_line_spectra(
            &spectra::laplacian_spectrum(&u)?,
            &spectra::laplacian_spectrum(&u.negate())?,
            m,
            n,
            ur.c(),
            ur.c_b(),
        )?;
        let pos_s = spectra::spectrum(&line_graph(&u).graph)?;
        let ok = within(closed_form_gap(&h.positive.adjacency, &pos_s), CLOSED_FORM_TOL)
            && within(closed_form_gap(&h.negative.adjacency, &neg_s), CLOSED_FORM_TOL)
            && within(closed_form_gap(&h.unsigned.adjacency, &classical_s), CLOSED_FORM_TOL)
            && (h.positive.energy - pos_s.sum_abs()).abs() <= ENERGY_TOL
            && (h.unsigned.energy - classical_s.sum_abs()).abs() <= ENERGY_TOL;
        homogeneous.check(ok, || describe(&g));

        if let Some(k) = g.regular_degree().filter(|&k| k > 0) {
            regular.check(regular_line_holds(&g, k, &solved)?, || describe(&g));
            let hr = formulas::homogeneous_line_spectra_regular(&spectra::spectrum(&u)?, k, m, n, ur.c(), ur.c_b())?;
            let ok = forms_mismatch(&hr.positive, &Solved::of(&line_graph(&u).graph)?).is_none()
                && forms_mismatch(&hr.negative, &Solved::of(&neg_line)?).is_none()
                && forms_mismatch(&hr.unsigned, &Solved::of(&classical)?).is_none();
            homogeneous.check(ok, || format!("regular: {}", describe(&g)));
        }
    }
    for g in regular_family_instances(max.min(6))? {
        if let Some(k) = g.regular_degree().filter(|&k| k > 0) {
            let solved = Solved::of(&line_graph(&g).graph)?;
            regular.check(regular_line_holds(&g, k, &solved)?, || describe(&g));
        }
    }

    for n in 3..=max + 2 {
        for r in 0..=n {
            let lg = line_graph(&cycle(n, r)?).graph;
            let is_cycle = lg.order() == n && lg.size() == n && lg.regular_degree() == Some(2) && {
                let c = balance_report(&lg);
                c.c() == 1
            };
            let sign = Sign::product(lg.edges().iter().map(|e| e.sign));
            let expected = if r % 2 == 0 { Sign::Positive } else { Sign::Negative };
            cycles.check(is_cycle && sign == expected, || format!("n={n} r={r}"));
        }
    }

    let mut rng = random::rng(config.seed ^ 0x1c);
    for _ in 0..NEPS_COMBINATIONS / 2 {
        let factors = random::factor_set(&mut rng, 3, LINE_CARTESIAN_MAX_ORDER);
        let product = products::cartesian(&factors)?;
        let solved = Solved::of(&line_graph(&product).graph)?;
        let laps: Vec<Spectrum> = factors.iter().map(spectra::laplacian_spectrum).collect::<Result<_>>()?;
        let bs: Vec<usize> = factors.iter().map(|f| balance_report(f).b()).collect();
        let d = products::average_degree(&factors, &Basis::cartesian(factors.len())?)?;
        let forms = formulas::line_spectrum_cartesian(&laps, &bs, d, product.order())?;
        cartesian.check(forms_mismatch(&forms, &solved).is_none(), || {
            format!("{:?}", factors.iter().map(describe).collect::<Vec<_>>())
        });
    }
    for (a, b) in [(3usize, 3usize), (3, 4), (4, 5), (5, 3)] {
        for (ra, rb) in [(0, 0), (1, 0), (1, 1)] {
            let f = [cycle(a, ra)?, complete(b, if rb == 0 { Sign::Positive } else { Sign::Negative })?];
            let product = products::cartesian(&f)?;
            let solved = Solved::of(&line_graph(&product).graph)?;
            let adj: Vec<Spectrum> = f.iter().map(spectra::spectrum).collect::<Result<_>>()?;
            let forms = formulas::line_spectrum_cartesian_regular(&adj, &[2, b - 1])?;
            cartesian.check(forms_mismatch(&forms, &solved).is_none(), || format!("C_{a}^({ra}) × ±K_{b}"));
        }
    }

    Ok(vec![
        general.done(),
        energy.done(),
        upper.done(),
        negation.done(),
        homogeneous.done(),
        regular.done(),
        cycles.done(),
        cartesian.done(),
    ])
}

fn regular_line_holds(g: &SignedGraph, k: usize, line_solved: &Solved) -> Result<bool> {
    let forms = formulas::line_spectrum_regular(
        &spectra::spectrum(g)?,
        k,
        g.size(),
        g.order(),
        balance_report(g).b(),
        balance_report(&g.negate()).b(),
    )?;
    Ok(forms_mismatch(&forms, line_solved).is_none())
}
