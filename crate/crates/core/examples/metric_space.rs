//! Solving `ΘH = H†Θ` for a random non-Hermitian matrix with real spectrum.

use quasiherm::metric::{check_quasi_hermiticity, solve_metric_space};
use quasiherm::{Complex64, ComplexMatrix, Tolerance};

fn main() -> quasiherm::Result<()> {
    let tol = Tolerance::default();
    // Upper triangular, so the spectrum {1, 2, 4} is read off the diagonal.
    let c = |re, im| Complex64::new(re, im);
    let h = ComplexMatrix::from_complex_rows(&[
        [c(1.0, 0.0), c(0.5, 1.0), c(-2.0, 0.0)],
        [c(0.0, 0.0), c(2.0, 0.0), c(0.3, -0.7)],
        [c(0.0, 0.0), c(0.0, 0.0), c(4.0, 0.0)],
    ])?;
    let space = solve_metric_space(&h, &tol)?;
    println!(
        "dimension {} (residual {:.2e})",
        space.dimension, space.residual
    );
    for (k, theta) in space.basis.iter().enumerate() {
        let check = check_quasi_hermiticity(&h, theta, &tol)?;
        println!("basis[{k}]: intertwining residual {:.2e}", check.residual);
    }
    Ok(())
}
