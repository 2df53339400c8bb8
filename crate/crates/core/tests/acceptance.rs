//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p signet --test acceptance -- --nocapture` to see the
//! lines when everything passes; on failure the harness prints them anyway.

use std::time::{Duration, Instant};

use signet::families::{complete, path};
use signet::formulas;
use signet::products::{self, kron_sum_over_basis};
use signet::random::{self, seed_from_env, standard_corpus};
use signet::spectra::{self, laplacian_energy_of, Spectrum, CLOSED_FORM_TOL};
use signet::verify::{self, VerifyConfig};
use signet::{balance_report, line_graph, oracle, Sign, SignedGraph, SymMatrix};

const SPECTRUM_TOL: f64 = 1e-8;
const ENERGY_TOL: f64 = 1e-7;
const KIRCHHOFF_BUDGET: Duration = Duration::from_secs(5);
const CLOSED_FORM_BUDGET: Duration = Duration::from_secs(60);

struct Outcome {
    id: u8,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(id: u8, name: &'static str, passed: bool, detail: String) -> Outcome {
    Outcome { id, name, passed, detail }
}

fn kirchhoff(corpus: &[SignedGraph]) -> Outcome {
    let start = Instant::now();
    let bad = corpus.iter().filter(|g| g.incidence().kirchhoff() != g.laplacian()).count();
    let took = start.elapsed();
    outcome(
        1,
        "Kirchhoff identity H·Hᵀ == L",
        bad == 0 && corpus.len() == 500 && took < KIRCHHOFF_BUDGET,
        format!("{} graphs, {bad} mismatches, {took:.2?} (budget {KIRCHHOFF_BUDGET:?})", corpus.len()),
    )
}

fn rank_law(corpus: &[SignedGraph]) -> Outcome {
    let bad = corpus
        .iter()
        .filter(|g| oracle::rank_exact(g.laplacian().as_matrix()) != g.order() - balance_report(g).b())
        .count();
    outcome(2, "rank L == n − b by exact elimination", bad == 0, format!("{} graphs, {bad} mismatches", corpus.len()))
}

fn acharya(corpus: &[SignedGraph]) -> Outcome {
    let (mut balanced, mut unbalanced, mut bad) = (0, 0, 0);
    for g in corpus {
        let same = spectra::spectrum(g).unwrap().matches(&spectra::spectrum(&g.underlying()).unwrap(), SPECTRUM_TOL);
        let is_balanced = balance_report(g).is_balanced();
        if is_balanced {
            balanced += 1;
        } else {
            unbalanced += 1;
        }
        if same != is_balanced {
            bad += 1;
        }
    }
    outcome(
        3,
        "balanced ⇔ cospectral with underlying graph",
        bad == 0 && balanced > 0 && unbalanced > 0,
        format!("{balanced} balanced, {unbalanced} unbalanced, {bad} violations"),
    )
}

fn neps_matrix(seed: u64) -> Outcome {
    let mut rng = random::rng(seed ^ 0x4e);
    let mut bad = 0;
    let mut largest = 0;
    for _ in 0..200 {
        let factors = random::factor_set(&mut rng, 3, 64);
        let basis = random::basis(&mut rng, factors.len());
        let product = products::neps(&factors, &basis).unwrap();
        largest = largest.max(product.order());
        let adjs: Vec<SymMatrix> = factors.iter().map(SignedGraph::adjacency).collect();
        if product.adjacency() != kron_sum_over_basis(&adjs, &basis).unwrap() {
            bad += 1;
        }
    }
    outcome(
        4,
        "A(NEPS) == Σ_β ⊗A_i^β_i",
        bad == 0 && largest <= 64,
        format!("200 combinations, largest product order {largest}, {bad} mismatches"),
    )
}

fn closed_forms(seed: u64) -> Outcome {
    let start = Instant::now();
    let report = verify::run_suite("closed-forms", &VerifyConfig { max: Some(6), seed }).unwrap();
    let took = start.elapsed();
    let printed_off: Vec<&verify::Finding> = report.findings.iter().filter(|f| f.mismatches > 0).collect();
    let general_ok = printed_off.iter().all(|f| f.general_theorem_agrees);
    let checks: usize = report.properties.iter().map(|p| p.passed + p.failed).sum();
    outcome(
        5,
        "closed forms match the eigensolver (m, n ≤ 6, all r parities)",
        report.passed() && general_ok && took < CLOSED_FORM_BUDGET,
        format!(
            "{checks} instances, {} failures, {took:.2?} (budget {CLOSED_FORM_BUDGET:?}); {} printed variants \
             disagree with the solver, general theorems agree on all of them: {general_ok}",
            report.total_failed(),
            printed_off.len(),
        ),
    )
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn complete_line_numbers() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    for n in 3..=8usize {
        let nf = n as f64;
        let plus_line = line_graph(&complete(n, Sign::Positive).unwrap()).graph;
        let minus_line = line_graph(&complete(n, Sign::Negative).unwrap()).graph;
        let plus_solver = spectra::energy(&plus_line).unwrap();
        let minus_solver = spectra::energy(&minus_line).unwrap();
        let plus_expected = (nf - 1.0) * (2.0 * nf - 5.0);
        let minus_expected = (nf - 1.0) * (2.0 * nf - 5.0) + 2.0 * (nf - 3.0);
        let mult = spectra::spectrum(&plus_line).unwrap().multiplicity(2.0);
        let (a, b, c) = (
            (plus_solver - plus_expected).abs() <= ENERGY_TOL,
            (minus_solver - minus_expected).abs() <= ENERGY_TOL,
            mult == binom2(n - 1),
        );
        passed &= a && b && c;
        if !(a && b && c) {
            notes.push(format!(
                "n={n}: E(Λ(+K_n)) {plus_solver:.6} vs {plus_expected}, E(Λ(−K_n)) {minus_solver:.6} vs {minus_expected}, \
                 mult(2) {mult} vs {}",
                binom2(n - 1)
            ));
        }
    }
    let detail = if notes.is_empty() { "n = 3..8 all match".to_string() } else { notes.join("; ") };
    outcome(6, "E(Λ(±K_n)) printed values and mult(2) == C(n−1, 2)", passed, detail)
}

fn energy_bounds(seed: u64) -> Outcome {
    let report = verify::run_suite("energy-bounds", &VerifyConfig { max: Some(64), seed }).unwrap();
    let counts: Vec<String> =
        report.properties.iter().map(|p| format!("{} {}/{}", p.name, p.passed, p.passed + p.failed)).collect();
    let nonempty = report.properties.iter().all(|p| p.passed + p.failed > 0);
    outcome(7, "NEPS and Laplacian energy bounds", report.passed() && nonempty, counts.join("; "))
}

fn balance_multiplicativity(seed: u64) -> Outcome {
    let mut rng = random::rng(seed ^ 0xb1);
    let mut bad = 0;
    for _ in 0..100 {
        let factors = random::factor_set(&mut rng, 3, 64);
        let expected: usize = factors.iter().map(|f| balance_report(f).b()).product();
        if balance_report(&products::cartesian(&factors).unwrap()).b() != expected {
            bad += 1;
        }
    }
    outcome(8, "b(Cartesian) == ∏ b(Σ_i)", bad == 0, format!("100 factor sets, {bad} mismatches"))
}

fn regular_ladder() -> Outcome {
    let instances = verify::regular_family_instances(6).unwrap();
    let mut bad = Vec::new();
    for g in &instances {
        let k = g.regular_degree().unwrap() as f64;
        let s = spectra::spectrum(g).unwrap();
        let ls = spectra::laplacian_spectrum(g).unwrap();
        // k − λ over λ in descending order is ascending
        let shifted: Vec<f64> = s.values().iter().rev().map(|x| k - x).collect();
        let ladder = ls.values().iter().zip(&shifted).all(|(a, b)| (a - b).abs() <= SPECTRUM_TOL);
        let el = if g.order() == 0 { 0.0 } else { laplacian_energy_of(&ls, g.average_degree()) };
        if !(ladder && (el - s.sum_abs()).abs() <= ENERGY_TOL) {
            bad.push(signet::io::to_json_string(g));
        }
    }
    outcome(
        9,
        "regular families: E_L == E and λ^L == k − λ",
        bad.is_empty(),
        format!("{} instances (cycles, tori, ±K_n), {} failures {:?}", instances.len(), bad.len(), bad.first()),
    )
}

fn line_graph_theorem(corpus: &[SignedGraph]) -> Outcome {
    let (mut bad, mut with_trees) = (0, 0);
    for g in corpus {
        let (m, n, b) = (g.size(), g.order(), balance_report(g).b());
        let lap = spectra::laplacian_spectrum(g).unwrap();
        let predicted = formulas::line_spectrum_general(&lap, m, n, b).unwrap().values().unwrap();
        let solved = spectra::spectrum(&line_graph(g).graph).unwrap();
        if !Spectrum::from_values(predicted).matches(&solved, CLOSED_FORM_TOL) {
            bad += 1;
        }
        if m > 0 && m + b < 2 * n {
            with_trees += 1;
        }
    }
    outcome(
        10,
        "spectrum(Λ) from L: {2 − λ^L} ∪ 2^(m−n+b)",
        bad == 0 && with_trees > 0,
        format!("{} graphs ({with_trees} with m−n+b < n), {bad} mismatches", corpus.len()),
    )
}

#[test]
fn acceptance() {
    let seed = seed_from_env();
    let corpus = standard_corpus(seed);
    assert_eq!(corpus.len(), 500);
    assert!(corpus.iter().all(|g| g.order() <= 8));
    // exercise the family generators once so a broken build fails loudly here
    assert_eq!(path(3, 1).unwrap().negative_edge_count(), 1);

    let outcomes = [
        kirchhoff(&corpus),
        rank_law(&corpus),
        acharya(&corpus),
        neps_matrix(seed),
        closed_forms(seed),
        complete_line_numbers(),
        energy_bounds(seed),
        balance_multiplicativity(seed),
        regular_ladder(),
        line_graph_theorem(&corpus),
    ];
    println!("seed {seed}");
    for o in &outcomes {
        println!("{} criterion {:>2}: {} — {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.name, o.detail);
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
