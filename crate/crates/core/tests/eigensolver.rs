//! Jacobi solver against nalgebra's symmetric eigen-decomposition.

use nalgebra::DMatrix;
use proptest::prelude::*;
use signet::spectra::symmetric_eigenvalues;

fn reference(n: usize, a: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = DMatrix::from_row_slice(n, n, a).symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn symmetric(max_n: usize) -> impl Strategy<Value = (usize, Vec<f64>)> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-10.0f64..10.0, n * n).prop_map(move |raw| {
            let mut a = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..=i {
                    a[i * n + j] = raw[i * n + j];
                    a[j * n + i] = raw[i * n + j];
                }
            }
            (n, a)
        })
    })
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn agrees_with_nalgebra((n, a) in symmetric(24)) {
        let ours = symmetric_eigenvalues(n, a.clone()).unwrap();
        let theirs = reference(n, &a);
        let tol = 1e-9 * frobenius(&a).max(1.0);
        for (x, y) in ours.iter().zip(&theirs) {
            prop_assert!((x - y).abs() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn integer_adjacency_like_matrices((n, a) in symmetric(16)) {
        let a: Vec<f64> = a.iter().enumerate().map(|(k, x)| if k / n == k % n { 0.0 } else { x.signum() * (x.abs() > 5.0) as u8 as f64 }).collect();
        let ours = symmetric_eigenvalues(n, a.clone()).unwrap();
        let theirs = reference(n, &a);
        for (x, y) in ours.iter().zip(&theirs) {
            prop_assert!((x - y).abs() <= 1e-9 * frobenius(&a).max(1.0));
        }
    }
}

#[test]
fn trace_and_frobenius_are_preserved() {
    let n = 40;
    let a: Vec<f64> = (0..n * n).map(|k| ((k / n) as f64 - (k % n) as f64).cos() + if k / n == k % n { 3.0 } else { 0.0 }).collect();
    let ev = symmetric_eigenvalues(n, a.clone()).unwrap();
    let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
    assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-9);
    let fro2: f64 = a.iter().map(|x| x * x).sum();
    assert!((ev.iter().map(|x| x * x).sum::<f64>() - fro2).abs() < 1e-8 * fro2);
    assert!(ev.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn repeated_eigenvalues() {
    // J_6 − I: eigenvalue 5 once, −1 five times
    let n = 6;
    let a: Vec<f64> = (0..n * n).map(|k| if k / n == k % n { 0.0 } else { 1.0 }).collect();
    let ev = symmetric_eigenvalues(n, a).unwrap();
    assert!(ev[..5].iter().all(|x| (x + 1.0).abs() < 1e-12));
    assert!((ev[5] - 5.0).abs() < 1e-12);
}

#[test]
fn rejects_misshapen_input() {
    assert!(symmetric_eigenvalues(2, vec![0.0, 1.0, 2.0]).is_err());
    assert!(symmetric_eigenvalues(0, vec![]).unwrap().is_empty());
}
