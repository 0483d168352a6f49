//! Positivity of `Θ(ξ)` against the admissibility bound `ξ² + cos²α < 1`.

use quasiherm::metric::{positivity_region, solve_metric_space};
use quasiherm::toy::{hamiltonian_at, toy_metric, ToyParameters};
use quasiherm::Tolerance;

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    let alpha = 1.0;
    let space = solve_metric_space(&hamiltonian_at(alpha, 1.0)?, &tol)?;
    println!("alpha = {alpha}, admissible |xi| < {:.6}", f64::sin(alpha));
    for xi in [-1.0, -0.8, -0.5, 0.0, 0.5, 0.8, 0.84, 0.85, 1.0] {
        let p = ToyParameters::with_xi(alpha, xi)?;
        let coeffs = space.coefficients_of(&toy_metric(&p))?;
        let probe = positivity_region(&space, &coeffs, &tol)?;
        println!(
            "xi = {xi:+.2}: positive {:<5} min eigenvalue {:+.6}",
            probe.positive, probe.min_eigenvalue
        );
    }
    Ok(())
}
