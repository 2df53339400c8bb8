//! Reference numbers computed outside this crate (dense `numpy.linalg.eigvalsh`
//! on directly assembled matrices) and frozen here.

use approx::assert_abs_diff_eq;
use signet::families::{complete, cycle, cylinder, grid, path, torus};
use signet::formulas;
use signet::spectra::{energy, laplacian_energy, spectrum};
use signet::{line_graph, Sign, SignedGraph};

const TOL: f64 = 1e-9;

fn line_energy(g: &SignedGraph) -> f64 {
    energy(&line_graph(g).graph).unwrap()
}

#[test]
fn complete_graph_line_energies() {
    let plus = [4.0, 12.0, 24.0, 40.0, 60.0, 84.0];
    let minus = [4.0, 8.0, 20.0, 36.0, 56.0, 80.0];
    for (k, n) in (3..=8).enumerate() {
        assert_abs_diff_eq!(line_energy(&complete(n, Sign::Positive).unwrap()), plus[k], epsilon = TOL);
        assert_abs_diff_eq!(line_energy(&complete(n, Sign::Negative).unwrap()), minus[k], epsilon = TOL);
        assert_abs_diff_eq!(formulas::complete_plus_line_energy(n), plus[k], epsilon = TOL);
        assert_abs_diff_eq!(formulas::complete_minus_line_energy(n), minus[k], epsilon = TOL);
    }
}

#[test]
fn small_spectra() {
    let cases: [(SignedGraph, &[f64]); 4] = [
        (cycle(5, 1).unwrap(), &[-2.0, -0.61803398875, -0.61803398875, 1.61803398875, 1.61803398875]),
        (cycle(6, 0).unwrap(), &[-2.0, -1.0, -1.0, 1.0, 1.0, 2.0]),
        (path(4, 2).unwrap(), &[-1.61803398875, -0.61803398875, 0.61803398875, 1.61803398875]),
        (complete(4, Sign::Negative).unwrap(), &[-3.0, 1.0, 1.0, 1.0]),
    ];
    for (g, expected) in cases {
        let s = spectrum(&g).unwrap();
        for (x, y) in s.values().iter().zip(expected) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-10);
        }
    }
}

#[test]
fn energies() {
    // (graph, E, E_L, E(Λ))
    let cases = [
        (cycle(5, 1).unwrap(), 6.472135955000, 6.472135955000, 6.472135955000),
        (cycle(6, 0).unwrap(), 8.0, 8.0, 8.0),
        (path(4, 2).unwrap(), 4.472135955000, 4.828427124746, 2.828427124746),
        (grid(3, 0, 3, 1).unwrap(), 11.313708498985, 13.333333333333, 20.0),
        (cylinder(4, 1, 3, 0).unwrap(), 16.970562748477, 17.980375165651, 39.313708498985),
        (torus(3, 1, 4, 0).unwrap(), 20.0, 20.0, 52.0),
        (complete(4, Sign::Negative).unwrap(), 6.0, 6.0, 8.0),
    ];
    for (g, e, el, eline) in cases {
        assert_abs_diff_eq!(energy(&g).unwrap(), e, epsilon = TOL);
        assert_abs_diff_eq!(laplacian_energy(&g).unwrap(), el, epsilon = TOL);
        assert_abs_diff_eq!(line_energy(&g), eline, epsilon = TOL);
    }
}

#[test]
fn closed_forms_reproduce_reference_energies() {
    assert_abs_diff_eq!(formulas::grid_spectra(3, 3).energy, 11.313708498985, epsilon = TOL);
    assert_abs_diff_eq!(formulas::grid_spectra(3, 3).laplacian_energy.unwrap(), 13.333333333333, epsilon = TOL);
    assert_abs_diff_eq!(formulas::line_grid_spectra(3, 3).energy, 20.0, epsilon = TOL);
    assert_abs_diff_eq!(formulas::cylinder_spectra(4, 1, 3).energy, 16.970562748477, epsilon = TOL);
    assert_abs_diff_eq!(formulas::line_cylinder_spectra(4, 1, 3).energy, 39.313708498985, epsilon = TOL);
    assert_abs_diff_eq!(formulas::line_torus_spectra(3, 1, 4, 0).energy, 52.0, epsilon = TOL);
}
