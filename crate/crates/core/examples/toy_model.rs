//! Closed forms of the two-level model under both parametrizations.

use std::f64::consts::PI;

use quasiherm::toy::{toy_energies, toy_metric_eigenvalues, ToyParameters};

fn main() -> quasiherm::Result<()> {
    let alpha = PI / 3.0;
    let (lo, hi) = toy_energies(&ToyParameters::with_xi(alpha, 0.0)?);
    println!("alpha = pi/3: E = {lo:+.7}, {hi:+.7}");
    for gamma in [0.0, 0.5, 1.0, 1.5] {
        let p = ToyParameters::with_gamma(alpha, gamma)?;
        let (tm, tp) = toy_metric_eigenvalues(&p);
        println!(
            "gamma = {gamma:.1}: xi = {:+.6}, theta = {tm:.6}, {tp:.6}",
            p.xi()
        );
    }
    for d in [0.5, 2.0] {
        let (lo, hi) = toy_energies(&ToyParameters::with_xi(alpha, 0.0)?.scaled(d)?);
        println!("D = {d}: E = {lo:+.7}, {hi:+.7}");
    }
    Ok(())
}
