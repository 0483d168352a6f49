mod common;

use std::f64::consts::PI;

use quasiherm::spectral::{biorthogonal_system, spectral_map};
use quasiherm::symmetry::{
    admissible_xi_grid, charge_factorization, charge_nonexistence_scan, check_eta_symmetry,
    check_pseudo_hermiticity,
};
use quasiherm::toy::{hamiltonian_at, parity_2x2, toy_charge_squared, toy_metric, ToyParameters};
use quasiherm::{Complex64, ComplexMatrix, Tolerance};

#[test]
fn charge_residual_bounded_below() {
    let tol = Tolerance::default();
    let p = parity_2x2();
    for alpha in common::linspace(0.05, PI - 0.05, 100) {
        let c2 = alpha.cos().powi(2);
        for xi in admissible_xi_grid(alpha, 100) {
            let params = ToyParameters::with_xi(alpha, xi).unwrap();
            let report = charge_factorization(&toy_metric(&params), &p, &tol).unwrap();
            // ‖C² − I‖² = 2(ξ² − c²)² + 8ξ²(1 + c²), smallest at ξ = 0.
            assert!(report.involution_residual_c >= 2f64.sqrt() * c2 - 1e-12);
            let rebuilt = &report.charge * &p;
            assert!(rebuilt.max_abs_diff(&toy_metric(&params)) < 1e-12);
            let closed = toy_charge_squared(&params);
            let numeric = &report.charge * &report.charge;
            assert!(closed.max_abs_diff(&numeric) < 1e-12);
        }
    }
}

#[test]
fn scan_minimum_matches_closed_form() {
    let tol = Tolerance::default();
    for alpha in common::linspace(0.2, PI - 0.2, 9) {
        let scan = charge_nonexistence_scan(alpha, 101, &tol).unwrap();
        assert!((scan.min_residual - 2f64.sqrt() * alpha.cos().powi(2)).abs() < 1e-12);
        assert!(scan.witness_xi.abs() < 1e-12);
    }
}

#[test]
fn parity_is_a_pseudo_metric() {
    let tol = Tolerance::default();
    for alpha in common::linspace(0.0, PI, 50) {
        let check =
            check_pseudo_hermiticity(&hamiltonian_at(alpha, 1.0).unwrap(), &parity_2x2(), &tol)
                .unwrap();
        assert!(check.holds && check.eta_hermitian, "alpha={alpha}");
    }
}

#[test]
fn hermitian_eta_gives_trivial_symmetry() {
    let tol = Tolerance::default();
    let mut rng = common::rng(13);
    for n in 2..=6 {
        let s = common::real_spectrum_sample(&mut rng, n);
        let eta =
            &common::random_hermitian(&mut rng, n) + &ComplexMatrix::identity(n).scale_real(3.0);
        let sym = check_eta_symmetry(&s.h, &eta, &tol).unwrap();
        assert!(sym.s_matrix.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        assert!(!sym.nontrivial);
    }
}

#[test]
fn twisted_eta_gives_commuting_symmetry() {
    let tol = Tolerance::default();
    let alpha = 0.8;
    let h = hamiltonian_at(alpha, 1.0).unwrap();
    let theta = toy_metric(&ToyParameters::with_xi(alpha, 0.1).unwrap());
    let sys = biorthogonal_system(&h, &tol).unwrap();
    let phase = spectral_map(&sys, |e| (Complex64::i() * e * 0.7).exp());
    let eta = &theta * &phase;
    let sym = check_eta_symmetry(&h, &eta, &tol).unwrap();
    assert!(sym.commutes && sym.nontrivial);
    let expected = spectral_map(&sys, |e| (Complex64::i() * e * 1.4).exp());
    assert!(sym.s_matrix.max_abs_diff(&expected) < 1e-10);
}
