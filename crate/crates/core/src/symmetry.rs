//! Pseudo-Hermiticity with respect to a supplied `η`, the symmetry generated
//! by a non-Hermitian `η`, and charge / quasi-parity factorizations of a
//! metric against a parity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    is_hermitian, require_same_shape, require_square, smallest_singular_value, ComplexMatrix,
    Tolerance,
};
use crate::metric::intertwining_residual;
use crate::toy::{parity_2x2, toy_metric, ToyParameters};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PseudoHermiticityCheck {
    pub residual: f64,
    pub holds: bool,
    pub eta_hermitian: bool,
}

fn require_invertible(eta: &ComplexMatrix, tol: &Tolerance) -> Result<()> {
    let sigma_min = smallest_singular_value(eta);
    if sigma_min > tol.abs_eps {
        Ok(())
    } else {
        Err(Error::Singular { sigma_min })
    }
}

/// Tests `ηH = H†η`. Whether `η` itself is Hermitian is reported alongside.
pub fn check_pseudo_hermiticity(
    h: &ComplexMatrix,
    eta: &ComplexMatrix,
    tol: &Tolerance,
) -> Result<PseudoHermiticityCheck> {
    require_square(h)?;
    require_same_shape(h, eta)?;
    require_invertible(eta, tol)?;
    let residual = intertwining_residual(h, eta);
    Ok(PseudoHermiticityCheck {
        residual,
        holds: residual <= tol.rel_eps,
        eta_hermitian: is_hermitian(eta, tol)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EtaSymmetry {
    /// `S = (η⁻¹)† η`.
    pub s_matrix: ComplexMatrix,
    pub commutes: bool,
    /// `S` differs from the identity.
    pub nontrivial: bool,
}

/// Builds `S = (η⁻¹)† η` and tests whether it commutes with `H`. `S` is the
/// identity exactly when `η` is Hermitian.
pub fn check_eta_symmetry(
    h: &ComplexMatrix,
    eta: &ComplexMatrix,
    tol: &Tolerance,
) -> Result<EtaSymmetry> {
    require_square(h)?;
    require_same_shape(h, eta)?;
    require_invertible(eta, tol)?;
    let s_matrix = &eta.inverse(tol)?.adjoint() * eta;
    let commutator = (&(&s_matrix * h) - &(h * &s_matrix)).frobenius_norm();
    let commutes = commutator <= tol.rel_eps * s_matrix.frobenius_norm() * h.frobenius_norm();
    let n = h.nrows();
    let departure = (&s_matrix - &ComplexMatrix::identity(n)).frobenius_norm();
    Ok(EtaSymmetry {
        nontrivial: departure > tol.bound((n as f64).sqrt()),
        commutes,
        s_matrix,
    })
}

/// Factors of `Θ` against a parity: `C = ΘP⁻¹`, `Q = P⁻¹Θ`.
#[derive(Debug, Clone, Serialize)]
pub struct ChargeReport {
    pub charge: ComplexMatrix,
    pub quasi_parity: ComplexMatrix,
    /// `‖C² − I‖_F`.
    pub involution_residual_c: f64,
    /// `‖Q² − I‖_F`.
    pub involution_residual_q: f64,
    pub involutive: bool,
}

pub fn charge_factorization(
    theta: &ComplexMatrix,
    parity: &ComplexMatrix,
    tol: &Tolerance,
) -> Result<ChargeReport> {
    require_square(theta)?;
    require_same_shape(theta, parity)?;
    if !is_hermitian(theta, tol)? {
        return Err(Error::Precondition("metric is not Hermitian".into()));
    }
    let n = theta.nrows();
    let id = ComplexMatrix::identity(n);
    let involution_bound = tol.bound((n as f64).sqrt());
    let parity_defect = (&(parity * parity) - &id).frobenius_norm();
    if parity_defect > involution_bound {
        return Err(Error::Precondition(format!(
            "parity is not an involution (‖P² − I‖_F = {parity_defect:e})"
        )));
    }
    let p_inv = parity.inverse(tol)?;
    let charge = theta * &p_inv;
    let quasi_parity = &p_inv * theta;
    let involution_residual_c = (&(&charge * &charge) - &id).frobenius_norm();
    let involution_residual_q = (&(&quasi_parity * &quasi_parity) - &id).frobenius_norm();
    Ok(ChargeReport {
        involutive: involution_residual_c <= involution_bound,
        charge,
        quasi_parity,
        involution_residual_c,
        involution_residual_q,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChargeScan {
    pub alpha: f64,
    pub grid: usize,
    pub min_residual: f64,
    pub witness_xi: f64,
}

/// Interior sample points of `(-sin α, sin α)`, offset by half a step from
/// both ends.
pub fn admissible_xi_grid(alpha: f64, grid: usize) -> Vec<f64> {
    let s = alpha.sin();
    let step = 2.0 * s / grid as f64;
    (0..grid).map(|i| -s + (i as f64 + 0.5) * step).collect()
}

/// Minimum of `‖C² − I‖_F` over the admissible metrics of the two-level
/// model at fixed `alpha`. Ties go to the smallest `ξ`.
pub fn charge_nonexistence_scan(alpha: f64, grid: usize, tol: &Tolerance) -> Result<ChargeScan> {
    if grid < 3 {
        return Err(Error::Domain(format!(
            "grid must have at least 3 points, got {grid}"
        )));
    }
    ToyParameters::with_xi(alpha, 0.0)?;
    let parity = parity_2x2();
    let mut best = (f64::INFINITY, f64::NAN);
    for xi in admissible_xi_grid(alpha, grid) {
        let theta = toy_metric(&ToyParameters::with_xi(alpha, xi)?);
        let report = charge_factorization(&theta, &parity, tol)?;
        if report.involution_residual_c < best.0 {
            best = (report.involution_residual_c, xi);
        }
    }
    Ok(ChargeScan {
        alpha,
        grid,
        min_residual: best.0,
        witness_xi: best.1,
    })
}
