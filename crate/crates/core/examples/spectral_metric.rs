//! Metrics from spectral weights: `Θ = Σ s_m |m⟩⟩⟨⟨m|`.

use std::f64::consts::PI;

use quasiherm::linalg::eig_hermitian;
use quasiherm::metric::{metric_from_weights, normalize_trace, MetricWeights};
use quasiherm::spectral::biorthogonal_system;
use quasiherm::toy::{hamiltonian_at, xi_of_metric};
use quasiherm::Tolerance;

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    let h = hamiltonian_at(PI / 3.0, 1.0)?;
    let sys = biorthogonal_system(&h, &tol)?;
    for weights in [[1.0, 1.0], [1.0, 2.0], [3.0, 1.0], [1.0, 10.0]] {
        let theta = normalize_trace(&metric_from_weights(
            &sys,
            &MetricWeights::new(weights.to_vec())?,
            &tol,
        )?)?;
        let eig = eig_hermitian(&theta)?;
        println!(
            "s = {weights:?}: xi = {:+.6}, eigenvalues {:.6} {:.6}",
            xi_of_metric(&theta)?,
            eig.eigenvalues[0],
            eig.eigenvalues[1]
        );
    }
    Ok(())
}
