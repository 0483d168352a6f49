//! Fixing the metric with one extra observable.

use std::f64::consts::PI;

use quasiherm::metric::solve_metric_space;
use quasiherm::observables::{constrain_metric, fix_xi_closed_form};
use quasiherm::toy::{hamiltonian_at, xi_of_metric};
use quasiherm::{ComplexMatrix, Tolerance};

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    let alpha = PI / 3.0;
    let space = solve_metric_space(&hamiltonian_at(alpha, 1.0)?, &tol)?;
    for (a, b, d) in [(1.0, 1.0, 3.0), (0.0, 2.0, 1.0), (0.0, 1.0, 5.0)] {
        let obs = ComplexMatrix::from_real_rows(&[[a, b], [b, d]])?;
        let out = constrain_metric(&space, &[obs], &tol)?;
        let xi = xi_of_metric(&out.reduced.basis[0])?;
        println!(
            "A = [[{a}, {b}], [{b}, {d}]]: xi = {xi:+.6} (closed form {:+.6}), {}",
            fix_xi_closed_form(a, b, d, alpha)?,
            out.diagnostic.as_deref().unwrap_or("positive metric found")
        );
        if let Some(theta) = out.theta_phys {
            println!("{theta:?}");
        }
    }
    Ok(())
}
