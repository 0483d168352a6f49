//! Attempting `Θ = CP` with an involutive charge `C`.

use std::f64::consts::PI;

use quasiherm::symmetry::{charge_factorization, charge_nonexistence_scan};
use quasiherm::toy::{parity_2x2, toy_metric, ToyParameters};
use quasiherm::Tolerance;

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    let theta = toy_metric(&ToyParameters::with_xi(PI / 3.0, 0.3)?);
    let report = charge_factorization(&theta, &parity_2x2(), &tol)?;
    println!(
        "C^2 at xi = 0.3, alpha = pi/3:\n{:?}",
        &report.charge * &report.charge
    );
    println!("|C^2 - I| = {:.6}\n", report.involution_residual_c);

    println!("{:>8} {:>12} {:>10}", "alpha", "min |C^2-I|", "at xi");
    for alpha in [0.3, PI / 4.0, PI / 3.0, 1.4, PI / 2.0, 2.0] {
        let scan = charge_nonexistence_scan(alpha, 201, &tol)?;
        println!(
            "{alpha:>8.4} {:>12.3e} {:>+10.4}",
            scan.min_residual, scan.witness_xi
        );
    }
    Ok(())
}
