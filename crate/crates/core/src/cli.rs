//! Command implementations behind the `quasiherm` binary.
//!
//! Each command reads JSON inputs, runs one analysis and returns the report
//! as a JSON string. Exit codes: 0 success, 2 input error, 3 mathematical
//! infeasibility.

use std::path::Path;

use serde::Serialize;

use crate::error::Error;
use crate::json::{self, ReadError};
use crate::linalg::{is_positive_definite, min_eigenvalue, ComplexMatrix, Tolerance};
use crate::metric::{
    metric_from_weights, normalize_trace, solve_metric_space, MetricSpace, MetricWeights,
};
use crate::observables::{constrain_metric, ConstrainedMetric};
use crate::spectral::{biorthogonal_system, classify_spectrum};
use crate::symmetry::{charge_factorization, charge_nonexistence_scan};
use crate::toy::{
    toy_energies, toy_hamiltonian, toy_metric, toy_metric_eigenvalues, xi_of_metric, ToyParameters,
};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(Error::NoPositiveMetric(_) | Error::ExceptionalPoint { .. }) => {
                EXIT_INFEASIBLE
            }
            _ => EXIT_INPUT,
        }
    }
}

pub type CliResult = Result<String, CliError>;

fn square_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let m = json::read_matrix(path)?;
    if !m.is_square() {
        return Err(CliError::Usage(format!(
            "{}: expected a square matrix, got {}x{}",
            path.display(),
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m)
}

pub fn cmd_spectrum(input: &Path, tol: &Tolerance) -> CliResult {
    let h = square_matrix(input)?;
    Ok(json::to_string(&classify_spectrum(&h, tol)?))
}

#[derive(Serialize)]
struct WeightedMetric {
    weights: Vec<f64>,
    metric: ComplexMatrix,
    positive: bool,
    min_eigenvalue: f64,
}

#[derive(Serialize)]
struct MetricsReport {
    #[serde(flatten)]
    space: MetricSpace,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    weighted: Option<WeightedMetric>,
}

pub fn cmd_metrics(input: &Path, weights: Option<&[f64]>, tol: &Tolerance) -> CliResult {
    let h = square_matrix(input)?;
    let space = solve_metric_space(&h, tol)?;
    let weighted = match weights {
        None => None,
        Some(w) => {
            if w.len() != h.nrows() {
                return Err(CliError::Usage(format!(
                    "{} weights given for a {}-level Hamiltonian",
                    w.len(),
                    h.nrows()
                )));
            }
            let weights = MetricWeights::new(w.to_vec())?;
            let sys = biorthogonal_system(&h, tol)?;
            let metric = normalize_trace(&metric_from_weights(&sys, &weights, tol)?)?;
            Some(WeightedMetric {
                weights: w.to_vec(),
                positive: is_positive_definite(&metric, tol)?,
                min_eigenvalue: min_eigenvalue(&metric, tol)?,
                metric,
            })
        }
    };
    Ok(json::to_string(&MetricsReport { space, weighted }))
}

pub fn cmd_charge(input: &Path, metric: &Path, parity: &Path, tol: &Tolerance) -> CliResult {
    let h = square_matrix(input)?;
    let theta = square_matrix(metric)?;
    let p = square_matrix(parity)?;
    if theta.nrows() != h.nrows() || p.nrows() != h.nrows() {
        return Err(CliError::Usage(format!(
            "dimension mismatch: Hamiltonian {}, metric {}, parity {}",
            h.nrows(),
            theta.nrows(),
            p.nrows()
        )));
    }
    Ok(json::to_string(&charge_factorization(&theta, &p, tol)?))
}

#[derive(Serialize)]
struct FixReport {
    #[serde(flatten)]
    constrained: ConstrainedMetric,
    /// Two-level metrics only: `ξ` of `θ_phys`.
    xi: Option<f64>,
}

pub fn cmd_fix(input: &Path, observables: &Path, tol: &Tolerance) -> CliResult {
    let h = square_matrix(input)?;
    let list = json::read_matrix_list(observables)?;
    let space = solve_metric_space(&h, tol)?;
    let constrained = constrain_metric(&space, &list, tol)?;
    let xi = match (&constrained.theta_phys, h.nrows()) {
        (Some(theta), 2) => Some(xi_of_metric(theta)?),
        _ => None,
    };
    Ok(json::to_string(&FixReport { constrained, xi }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelQuery {
    Hamiltonian,
    Metric,
    Energies,
    ChargeScan { grid: usize },
}

/// Parameters of the two-level model as given on the command line.
#[derive(Debug, Clone, Copy)]
pub struct ModelArgs {
    pub alpha: f64,
    pub xi: Option<f64>,
    pub gamma: Option<f64>,
    pub d_scale: f64,
    /// Angles were given in degrees.
    pub degrees: bool,
}

impl ModelArgs {
    pub fn radians(alpha: f64) -> Self {
        Self {
            alpha,
            xi: None,
            gamma: None,
            d_scale: 1.0,
            degrees: false,
        }
    }

    fn parameters(&self) -> Result<ToyParameters, CliError> {
        let angle = |x: f64| if self.degrees { x.to_radians() } else { x };
        let alpha = angle(self.alpha);
        let p = match (self.xi, self.gamma) {
            (Some(_), Some(_)) => {
                return Err(CliError::Usage("give at most one of --xi, --gamma".into()))
            }
            (_, Some(g)) => ToyParameters::with_gamma(alpha, angle(g))?,
            (xi, None) => ToyParameters::with_xi(alpha, xi.unwrap_or(0.0))?,
        };
        Ok(p.scaled(self.d_scale)?)
    }
}

#[derive(Serialize)]
struct HamiltonianOut {
    alpha: f64,
    d_scale: f64,
    hamiltonian: ComplexMatrix,
}

#[derive(Serialize)]
struct MetricOut {
    alpha: f64,
    xi: f64,
    gamma: Option<f64>,
    metric: ComplexMatrix,
    theta_minus: f64,
    theta_plus: f64,
    admissible: bool,
}

#[derive(Serialize)]
struct EnergiesOut {
    alpha: f64,
    d_scale: f64,
    e_minus: f64,
    e_plus: f64,
}

pub fn cmd_model2x2(query: ModelQuery, args: &ModelArgs, tol: &Tolerance) -> CliResult {
    let p = args.parameters()?;
    let out = match query {
        ModelQuery::Hamiltonian => json::to_string(&HamiltonianOut {
            alpha: p.alpha(),
            d_scale: p.d_scale(),
            hamiltonian: toy_hamiltonian(&p),
        }),
        ModelQuery::Metric => {
            let (theta_minus, theta_plus) = toy_metric_eigenvalues(&p);
            json::to_string(&MetricOut {
                alpha: p.alpha(),
                xi: p.xi(),
                gamma: p.gamma(),
                metric: toy_metric(&p),
                theta_minus,
                theta_plus,
                admissible: p.is_admissible(),
            })
        }
        ModelQuery::Energies => {
            let (e_minus, e_plus) = toy_energies(&p);
            json::to_string(&EnergiesOut {
                alpha: p.alpha(),
                d_scale: p.d_scale(),
                e_minus,
                e_plus,
            })
        }
        ModelQuery::ChargeScan { grid } => {
            json::to_string(&charge_nonexistence_scan(p.alpha(), grid, tol)?)
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_INPUT);
        assert_eq!(
            CliError::Math(Error::NoPositiveMetric("x".into())).exit_code(),
            EXIT_INFEASIBLE
        );
        assert_eq!(
            CliError::Math(Error::Domain("x".into())).exit_code(),
            EXIT_INPUT
        );
    }

    #[test]
    fn model_energies() {
        let out = cmd_model2x2(
            ModelQuery::Energies,
            &ModelArgs::radians(PI / 3.0),
            &Tolerance::default(),
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["e_plus"].as_f64().unwrap() - 0.8660254).abs() < 1e-7);
        assert!((v["e_minus"].as_f64().unwrap() + 0.8660254).abs() < 1e-7);
    }

    #[test]
    fn model_degrees_match_radians() {
        let tol = Tolerance::default();
        let mut deg = ModelArgs::radians(60.0);
        deg.degrees = true;
        deg.gamma = Some(45.0);
        let mut rad = ModelArgs::radians(PI / 3.0);
        rad.gamma = Some(PI / 4.0);
        let a: serde_json::Value =
            serde_json::from_str(&cmd_model2x2(ModelQuery::Metric, &deg, &tol).unwrap()).unwrap();
        let b: serde_json::Value =
            serde_json::from_str(&cmd_model2x2(ModelQuery::Metric, &rad, &tol).unwrap()).unwrap();
        assert!((a["xi"].as_f64().unwrap() - b["xi"].as_f64().unwrap()).abs() < 1e-15);
    }

    #[test]
    fn model_rejects_out_of_domain() {
        let tol = Tolerance::default();
        let err = cmd_model2x2(ModelQuery::Energies, &ModelArgs::radians(0.0), &tol).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INPUT);
        let mut both = ModelArgs::radians(1.0);
        both.xi = Some(0.1);
        both.gamma = Some(0.1);
        assert!(matches!(
            cmd_model2x2(ModelQuery::Metric, &both, &tol),
            Err(CliError::Usage(_))
        ));
    }
}
