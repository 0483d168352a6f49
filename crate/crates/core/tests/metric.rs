mod common;

use common::strategies::hermitian_matrix;
use proptest::prelude::*;
use quasiherm::linalg::is_positive_definite;
use quasiherm::metric::{
    check_quasi_hermiticity, hermitian_coords, hermitian_from_coords, metric_from_weights,
    positivity_region, solve_metric_space, MetricWeights,
};
use quasiherm::observables::constrain_metric;
use quasiherm::spectral::biorthogonal_system;
use quasiherm::Tolerance;
use rand::Rng;

#[test]
fn dimension_law_matches_oracle() {
    let tol = Tolerance::default();
    for s in common::ensemble(29) {
        let n = s.h.nrows();
        let space = solve_metric_space(&s.h, &tol).unwrap();
        assert_eq!(space.dimension, n);
        assert_eq!(common::kronecker_nullity(&s.h), n);
        for theta in &space.basis {
            assert!(check_quasi_hermiticity(&s.h, theta, &tol).unwrap().residual < 1e-8);
        }
    }
}

#[test]
fn hermitian_input_has_n_dimensional_space() {
    let mut rng = common::rng(41);
    for n in 1..=6 {
        let h = common::random_hermitian(&mut rng, n);
        assert_eq!(
            solve_metric_space(&h, &Tolerance::default())
                .unwrap()
                .dimension,
            n
        );
        assert_eq!(common::kronecker_nullity(&h), n);
    }
}

#[test]
fn scalar_hamiltonian_admits_every_hermitian_matrix() {
    let h = quasiherm::ComplexMatrix::identity(3).scale_real(2.5);
    assert_eq!(
        solve_metric_space(&h, &Tolerance::default())
            .unwrap()
            .dimension,
        9
    );
    assert_eq!(common::kronecker_nullity(&h), 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coordinates_round_trip(m in hermitian_matrix(1..=5)) {
        let back = hermitian_from_coords(m.nrows(), &hermitian_coords(&m)).unwrap();
        prop_assert!(back.max_abs_diff(&m) < 1e-14);
        let norm: f64 = hermitian_coords(&m).iter().map(|c| c * c).sum::<f64>().sqrt();
        prop_assert!((norm - m.frobenius_norm()).abs() < 1e-12);
    }

    #[test]
    fn positive_cone_is_convex_and_scale_invariant(seed in any::<u64>(), n in 2usize..=5, t in 0.0..1.0f64, k in 0.01..100.0f64) {
        let tol = Tolerance::default();
        let mut rng = common::rng(seed);
        let s = common::real_spectrum_sample(&mut rng, n);
        let sys = biorthogonal_system(&s.h, &tol).unwrap();
        let mut weights = || MetricWeights::new((0..n).map(|_| rng.random_range(0.1..10.0)).collect()).unwrap();
        let t1 = metric_from_weights(&sys, &weights(), &tol).unwrap();
        let t2 = metric_from_weights(&sys, &weights(), &tol).unwrap();
        let mix = &t1.scale_real(t) + &t2.scale_real(1.0 - t);
        prop_assert!(is_positive_definite(&mix, &tol).unwrap());
        prop_assert!(check_quasi_hermiticity(&s.h, &mix, &tol).unwrap().residual < 1e-8);
        prop_assert!(is_positive_definite(&t1.scale_real(k), &tol).unwrap());
        prop_assert!(!is_positive_definite(&t1.scale_real(-k), &tol).unwrap());
    }

    #[test]
    fn observables_never_enlarge_the_space(seed in any::<u64>(), n in 2usize..=4) {
        let tol = Tolerance::default();
        let mut rng = common::rng(seed);
        let s = common::real_spectrum_sample(&mut rng, n);
        let space = solve_metric_space(&s.h, &tol).unwrap();
        let observables: Vec<_> = (0..3).map(|_| common::random_hermitian(&mut rng, n)).collect();
        let mut previous = space.dimension;
        for k in 0..=observables.len() {
            let out = constrain_metric(&space, &observables[..k], &tol).unwrap();
            prop_assert!(out.reduced.dimension <= previous);
            previous = out.reduced.dimension;
        }
    }
}

#[test]
fn positivity_probe_on_toy_space() {
    let tol = Tolerance::default();
    let h = quasiherm::toy::hamiltonian_at(1.0, 1.0).unwrap();
    let space = solve_metric_space(&h, &tol).unwrap();
    let theta =
        quasiherm::toy::toy_metric(&quasiherm::toy::ToyParameters::with_xi(1.0, 0.2).unwrap());
    let coeffs = space.coefficients_of(&theta).unwrap();
    let probe = positivity_region(&space, &coeffs, &tol).unwrap();
    assert!(probe.positive);
    assert!(probe.theta.max_abs_diff(&theta) < 1e-12);
}

#[test]
fn kernel_basis_is_orthonormal_and_contains_spectral_metrics() {
    let tol = Tolerance::default();
    let mut rng = common::rng(53);
    for s in common::ensemble(31).into_iter().take(20) {
        let n = s.h.nrows();
        let space = solve_metric_space(&s.h, &tol).unwrap();
        for (i, a) in space.basis.iter().enumerate() {
            for (j, b) in space.basis.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((a.real_inner(b) - want).abs() < 1e-10);
            }
        }
        let sys = biorthogonal_system(&s.h, &tol).unwrap();
        let weights =
            MetricWeights::new((0..n).map(|_| rng.random_range(0.1..10.0)).collect()).unwrap();
        let theta = metric_from_weights(&sys, &weights, &tol).unwrap();
        let r = space.projection_residual(&theta).unwrap() / theta.frobenius_norm();
        assert!(r < 1e-8, "N={n}: projection residual {r:e}");
    }
}

#[test]
fn complement_of_kernel_is_not_a_solution() {
    let tol = Tolerance::default();
    let mut rng = common::rng(59);
    for s in common::ensemble(37).into_iter().filter(|s| s.h.nrows() <= 6) {
        let space = solve_metric_space(&s.h, &tol).unwrap();
        for _ in 0..5 {
            let mut m = common::random_hermitian(&mut rng, s.h.nrows());
            for b in &space.basis {
                m = &m - &b.scale_real(b.real_inner(&m));
            }
            let r = check_quasi_hermiticity(&s.h, &m, &tol).unwrap().residual;
            assert!(r > 1e-4, "residual {r:e}");
        }
    }
}
