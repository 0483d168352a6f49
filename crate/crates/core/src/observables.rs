//! Fixing the metric through auxiliary observables.
//!
//! Each observable `A` must satisfy `ΘA = A†Θ` with the same `Θ` as the
//! Hamiltonian. On the precomputed metric space this is a homogeneous real
//! linear system in the basis coefficients; intersecting the kernels of all
//! observables shrinks the space, and a one-dimensional result pins the
//! metric down to a positive scale.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    is_positive_definite, real_null_space, real_sigma_max, ComplexMatrix, Tolerance,
};
use crate::metric::{
    hermitian_coords, intertwining_operator, normalize_trace, MetricSpace, RANK_RTOL,
};

#[derive(Debug, Clone, Serialize)]
pub struct ConstrainedMetric {
    #[serde(flatten)]
    pub reduced: MetricSpace,
    pub unique_ray: bool,
    /// Positive-definite representative of a unique ray, trace normalized to N.
    pub theta_phys: Option<ComplexMatrix>,
    pub diagnostic: Option<String>,
}

/// Intersects the metric space with the quasi-Hermiticity constraints of
/// every observable. Observables need not be Hermitian.
pub fn constrain_metric(
    space: &MetricSpace,
    observables: &[ComplexMatrix],
    tol: &Tolerance,
) -> Result<ConstrainedMetric> {
    let n = space.size();
    for (k, a) in observables.iter().enumerate() {
        if a.nrows() != n || a.ncols() != n {
            return Err(Error::Dimension(format!(
                "observable {k} is {}x{}, Hamiltonian is {n}x{n}",
                a.nrows(),
                a.ncols()
            )));
        }
    }

    let reduced = if space.dimension == 0 || observables.is_empty() {
        space.clone()
    } else {
        let d = space.dimension;
        let per_basis: Vec<Vec<f64>> = space.basis.iter().map(hermitian_coords).collect();
        let coords = DMatrix::from_fn(n * n, d, |i, k| per_basis[k][i]);
        let active: Vec<&ComplexMatrix> = observables
            .iter()
            .filter(|a| a.frobenius_norm() > 0.0)
            .collect();
        let rows = n * n;
        let mut stacked = DMatrix::zeros(rows * active.len().max(1), d);
        for (k, a) in active.iter().enumerate() {
            let unit = a.scale_real(1.0 / a.frobenius_norm());
            let block = intertwining_operator(&unit) * &coords;
            stacked.view_mut((k * rows, 0), (rows, d)).copy_from(&block);
        }
        let threshold = RANK_RTOL * real_sigma_max(&stacked).max(1.0);
        let kernel = real_null_space(&stacked, threshold);
        let basis = (0..kernel.ncols())
            .map(|c| {
                let combo: Vec<f64> = kernel.column(c).iter().copied().collect();
                space.combine(&combo).map(|m| m.hermitian_part())
            })
            .collect::<Result<Vec<_>>>()?;
        MetricSpace::from_basis(space.hamiltonian.clone(), basis)
    };

    let unique_ray = reduced.dimension == 1;
    let (theta_phys, diagnostic) = if unique_ray {
        let ray = &reduced.basis[0];
        if is_positive_definite(ray, tol)? || is_positive_definite(&-ray, tol)? {
            (Some(normalize_trace(ray)?), None)
        } else {
            (
                None,
                Some("unique ray has no positive-definite representative".to_string()),
            )
        }
    } else if reduced.dimension == 0 {
        (
            None,
            Some("constraints admit no non-zero metric".to_string()),
        )
    } else {
        (
            None,
            Some(format!(
                "metric not fixed: {} free directions remain",
                reduced.dimension
            )),
        )
    };

    Ok(ConstrainedMetric {
        reduced,
        unique_ray,
        theta_phys,
        diagnostic,
    })
}

/// `ξ = (d − a)/(2b) · cos α` for the observable `[[a, b], [b, d]]` of the
/// two-level model.
pub fn fix_xi_closed_form(a: f64, b: f64, d: f64, alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha < PI) {
        return Err(Error::Domain(format!(
            "alpha must lie in the open interval (0, π), got {alpha}"
        )));
    }
    if b == 0.0 {
        return Err(Error::Trivial(
            "diagonal observable (b = 0) leaves the metric parameter free".into(),
        ));
    }
    Ok((d - a) / (2.0 * b) * alpha.cos())
}
