//! Randomised invariants over small signed graphs.

use proptest::prelude::*;
use signet::spectra::{self, CLOSED_FORM_TOL};
use signet::{balance_report, io, line_graph, oracle, products, Basis, Sign, SignedGraph, SymMatrix};

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

/// Graphs on up to `max_n` vertices; each pair is absent, positive or negative.
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::option::weighted(0.5, sign()), pairs).prop_map(move |slots| {
            let mut it = slots.into_iter();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if let Some(s) = it.next().flatten() {
                        edges.push((u, v, s));
                    }
                }
            }
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_switch(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<Sign>)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(sign(), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn incidence_factors_laplacian(g in signed_graph(9)) {
        prop_assert_eq!(g.incidence().kirchhoff(), g.laplacian());
    }

    #[test]
    fn line_graph_adjacency_from_gram(g in signed_graph(8)) {
        let lg = line_graph(&g);
        let expected = SymMatrix::identity(g.size()).scale(2).try_sub(&g.incidence().gram()).unwrap();
        prop_assert_eq!(lg.graph.adjacency(), expected);
        prop_assert_eq!(lg.edge_origin.len(), lg.graph.size());
        // line-graph size is Σ C(d_v, 2)
        let expected_size: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(lg.graph.size(), expected_size);
    }

    #[test]
    fn switching_keeps_spectrum_and_balance((g, s) in graph_and_switch(8)) {
        let h = g.switch(&s).unwrap();
        prop_assert!(spectra::spectrum(&h).unwrap().matches(&spectra::spectrum(&g).unwrap(), CLOSED_FORM_TOL));
        prop_assert!(spectra::laplacian_spectrum(&h).unwrap().matches(&spectra::laplacian_spectrum(&g).unwrap(), CLOSED_FORM_TOL));
        prop_assert_eq!(balance_report(&h).b(), balance_report(&g).b());
    }

    #[test]
    fn switching_twice_is_identity((g, s) in graph_and_switch(8)) {
        prop_assert_eq!(g.switch(&s).unwrap().switch(&s).unwrap(), g);
    }

    #[test]
    fn balance_matches_oracles(g in signed_graph(8)) {
        let r = balance_report(&g);
        prop_assert_eq!(oracle::balance_by_cycles(&g).unwrap().is_balanced(), r.is_balanced());
        prop_assert_eq!(oracle::balanced_components_by_switching(&g).unwrap(), r.b());
        prop_assert_eq!(oracle::rank_exact(g.laplacian().as_matrix()), g.order() - r.b());
    }

    #[test]
    fn certificate_switches_to_all_positive(g in signed_graph(8)) {
        let r = balance_report(&g);
        match r.certificate() {
            Some(s) => prop_assert!(g.switch(&s).unwrap().is_all_positive()),
            None => prop_assert!(!r.is_balanced()),
        }
    }

    #[test]
    fn negation_flips_adjacency_spectrum(g in signed_graph(8)) {
        let s = spectra::spectrum(&g).unwrap();
        prop_assert!(spectra::spectrum(&g.negate()).unwrap().matches(&s.negated(), CLOSED_FORM_TOL));
        prop_assert!((spectra::energy(&g.negate()).unwrap() - s.sum_abs()).abs() < 1e-9);
    }

    #[test]
    fn laplacian_is_psd_with_trace_2m(g in signed_graph(8)) {
        let l = spectra::laplacian_spectrum(&g).unwrap();
        prop_assert!(l.min().unwrap_or(0.0) >= -1e-9);
        prop_assert!((l.sum() - 2.0 * g.size() as f64).abs() < 1e-9);
    }

    #[test]
    fn line_graph_spectrum_is_bounded_by_two(g in signed_graph(8)) {
        let s = spectra::spectrum(&line_graph(&g).graph).unwrap();
        prop_assert!(s.max().unwrap_or(0.0) <= 2.0 + 1e-9);
    }

    #[test]
    fn json_round_trip(g in signed_graph(10)) {
        let text = io::to_canonical_json(&g);
        let back = io::from_json_str(&text).unwrap();
        prop_assert_eq!(io::to_json_string(&back), text);
        prop_assert_eq!(back, g.canonical());
    }

    #[test]
    fn cartesian_eigenvalues_are_sums(a in signed_graph(4), b in signed_graph(4)) {
        prop_assume!(a.order() > 0 && b.order() > 0);
        let p = products::cartesian(&[a.clone(), b.clone()]).unwrap();
        let (sa, sb) = (spectra::spectrum(&a).unwrap(), spectra::spectrum(&b).unwrap());
        let sums: Vec<f64> = sa.values().iter().flat_map(|x| sb.values().iter().map(move |y| x + y)).collect();
        prop_assert!(spectra::spectrum(&p).unwrap().matches(&spectra::Spectrum::from_values(sums), CLOSED_FORM_TOL));
    }

    #[test]
    fn strong_product_eigenvalues_are_products(a in signed_graph(4), b in signed_graph(4)) {
        prop_assume!(a.order() > 0 && b.order() > 0);
        let p = products::neps(&[a.clone(), b.clone()], &Basis::strong(2).unwrap()).unwrap();
        let (sa, sb) = (spectra::spectrum(&a).unwrap(), spectra::spectrum(&b).unwrap());
        let prods: Vec<f64> = sa.values().iter().flat_map(|x| sb.values().iter().map(move |y| x * y)).collect();
        prop_assert!(spectra::spectrum(&p).unwrap().matches(&spectra::Spectrum::from_values(prods), CLOSED_FORM_TOL));
        prop_assert_eq!(p.size(), 2 * a.size() * b.size());
    }

    #[test]
    fn product_order_and_size(a in signed_graph(4), b in signed_graph(4), c in signed_graph(3)) {
        prop_assume!(a.order() * b.order() * c.order() > 0);
        let f = [a, b, c];
        let cart = products::cartesian(&f).unwrap();
        let n: usize = f.iter().map(SignedGraph::order).product();
        prop_assert_eq!(cart.order(), n);
        let m: usize = (0..3).map(|i| f[i].size() * n / f[i].order()).sum();
        prop_assert_eq!(cart.size(), m);
        prop_assert_eq!(
            products::symmetric_p(&f, 1).unwrap(),
            cart
        );
    }
}
