//! Closed forms for the two-level PT-symmetric family
//!
//! ```text
//! H(α) = D · [[-1,  cos α],      Θ(ξ) = [[1 + ξ, -cos α],
//!             [-cos α,   1]]              [-cos α, 1 - ξ]]
//! ```
//!
//! with energies `±D sin α`, metric eigenvalues `1 ± √(ξ² + cos²α)` and the
//! admissible metrics parametrized by `ξ = sin α · sin γ`, `γ ∈ [0, π/2)`.
//! Everything here is exact arithmetic on the parameters and serves as the
//! reference for the numerical paths elsewhere in the crate.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Parameters of the two-level model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToyParameters {
    alpha: f64,
    xi: f64,
    gamma: Option<f64>,
    d_scale: f64,
}

impl ToyParameters {
    /// Metric parameter given directly. `xi` may lie outside the positivity
    /// region so inadmissible metrics can be built on purpose.
    pub fn with_xi(alpha: f64, xi: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !xi.is_finite() {
            return Err(Error::Domain(format!("xi must be finite, got {xi}")));
        }
        Ok(Self {
            alpha,
            xi,
            gamma: None,
            d_scale: 1.0,
        })
    }

    /// Metric parameter from the angle `gamma ∈ [0, π/2)`; always admissible.
    pub fn with_gamma(alpha: f64, gamma: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(0.0..FRAC_PI_2).contains(&gamma) {
            return Err(Error::Domain(format!(
                "gamma must lie in [0, π/2), got {gamma}"
            )));
        }
        Ok(Self {
            alpha,
            xi: alpha.sin() * gamma.sin(),
            gamma: Some(gamma),
            d_scale: 1.0,
        })
    }

    pub fn scaled(mut self, d_scale: f64) -> Result<Self> {
        if !(d_scale.is_finite() && d_scale > 0.0) {
            return Err(Error::Domain(format!(
                "D must be positive and finite, got {d_scale}"
            )));
        }
        self.d_scale = d_scale;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn gamma(&self) -> Option<f64> {
        self.gamma
    }

    pub fn d_scale(&self) -> f64 {
        self.d_scale
    }

    /// `ξ² + cos²α < 1`.
    pub fn is_admissible(&self) -> bool {
        self.xi.hypot(self.alpha.cos()) < 1.0
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "alpha must lie in the open interval (0, π), got {alpha}"
        )))
    }
}

/// `[[-d, b], [-b, d]]` for arbitrary real couplings, including the
/// exceptional (`|b| = |d|`) and complex-spectrum (`|b| > |d|`) regimes.
pub fn pt_hamiltonian(d: f64, b: f64) -> Result<ComplexMatrix> {
    ComplexMatrix::from_real_rows(&[[-d, b], [-b, d]])
}

/// `D·[[-1, cos α], [-cos α, 1]]` for any real `alpha`, endpoints included.
pub fn hamiltonian_at(alpha: f64, d_scale: f64) -> Result<ComplexMatrix> {
    pt_hamiltonian(d_scale, d_scale * alpha.cos())
}

pub fn toy_hamiltonian(p: &ToyParameters) -> ComplexMatrix {
    hamiltonian_at(p.alpha, p.d_scale).expect("validated parameters give finite entries")
}

/// `(-D sin α, +D sin α)`.
pub fn toy_energies(p: &ToyParameters) -> (f64, f64) {
    let e = p.d_scale * p.alpha.sin();
    (-e, e)
}

/// The metric `[[1 + ξ, -cos α], [-cos α, 1 - ξ]]`, normalized to trace 2.
pub fn toy_metric(p: &ToyParameters) -> ComplexMatrix {
    let c = p.alpha.cos();
    ComplexMatrix::from_real_rows(&[[1.0 + p.xi, -c], [-c, 1.0 - p.xi]])
        .expect("validated parameters give finite entries")
}

/// `(1 - √(ξ² + cos²α), 1 + √(ξ² + cos²α))`.
pub fn toy_metric_eigenvalues(p: &ToyParameters) -> (f64, f64) {
    let r = p.xi.hypot(p.alpha.cos());
    (1.0 - r, 1.0 + r)
}

/// Closed-form square of the charge `C = Θ P⁻¹` with `P = diag(1, -1)`.
pub fn toy_charge_squared(p: &ToyParameters) -> ComplexMatrix {
    let c = p.alpha.cos();
    let xi = p.xi;
    let c2 = c * c;
    ComplexMatrix::from_real_rows(&[
        [(1.0 + xi).powi(2) - c2, 2.0 * xi * c],
        [-2.0 * xi * c, (1.0 - xi).powi(2) - c2],
    ])
    .expect("validated parameters give finite entries")
}

/// The 2×2 parity `diag(1, -1)`.
pub fn parity_2x2() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
}

/// Reads `ξ` off a 2×2 metric written as `Z·[[1 + ξ, ·], [·, 1 - ξ]]`.
pub fn xi_of_metric(theta: &ComplexMatrix) -> Result<f64> {
    if theta.nrows() != 2 || theta.ncols() != 2 {
        return Err(Error::Dimension(
            "xi is defined for 2x2 metrics only".into(),
        ));
    }
    let a = theta.get(0, 0).re;
    let d = theta.get(1, 1).re;
    if a + d == 0.0 {
        return Err(Error::Domain("metric has zero trace".into()));
    }
    Ok((a - d) / (a + d))
}
