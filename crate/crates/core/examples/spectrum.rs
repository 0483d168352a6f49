//! Spectrum classification across the two-level family, including the
//! exceptional endpoints.

use std::f64::consts::PI;

use quasiherm::spectral::classify_spectrum;
use quasiherm::toy::hamiltonian_at;
use quasiherm::Tolerance;

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    println!(
        "{:>8} {:>9} {:>11} {:>12}",
        "alpha", "all_real", "exceptional", "condition"
    );
    for alpha in [0.0, 0.01, PI / 4.0, PI / 3.0, PI / 2.0, PI - 0.01, PI] {
        let report = classify_spectrum(&hamiltonian_at(alpha, 1.0)?, &tol)?;
        println!(
            "{alpha:>8.4} {:>9} {:>11} {:>12.3e}",
            report.all_real, report.exceptional, report.condition_estimate
        );
    }
    Ok(())
}
