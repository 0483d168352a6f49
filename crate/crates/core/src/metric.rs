//! Hermitian solutions of the intertwining equation `ΘH = H†Θ`.
//!
//! The map `Θ ↦ ΘH − H†Θ` is real-linear on Hermitian matrices and sends
//! them to anti-Hermitian ones. Both spaces are coordinatized isometrically
//! (N diagonal entries, then the real and imaginary parts of the strict upper
//! triangle scaled by √2), so the kernel computed by SVD comes out as a
//! Frobenius-orthonormal family of Hermitian matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    is_positive_definite, min_eigenvalue, real_null_space, real_sigma_max, require_same_shape,
    require_square, ComplexMatrix, Tolerance,
};
use crate::spectral::BiorthogonalSystem;

/// Singular values at or below this fraction of the map's scale count as zero.
pub const RANK_RTOL: f64 = 1e-10;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Number of strictly-upper-triangular positions in an `n×n` matrix.
fn upper_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

/// Non-zero entries of the `k`-th orthonormal Hermitian generator.
fn generator_entries(n: usize, k: usize) -> Vec<(usize, usize, Complex64)> {
    let m = upper_count(n);
    if k < n {
        return vec![(k, k, Complex64::new(1.0, 0.0))];
    }
    let (offset, imaginary) = if k < n + m {
        (k - n, false)
    } else {
        (k - n - m, true)
    };
    let (i, j) = upper_pairs(n)
        .nth(offset)
        .expect("generator index in range");
    let h = 1.0 / SQRT_2;
    if imaginary {
        vec![
            (i, j, Complex64::new(0.0, h)),
            (j, i, Complex64::new(0.0, -h)),
        ]
    } else {
        vec![
            (i, j, Complex64::new(h, 0.0)),
            (j, i, Complex64::new(h, 0.0)),
        ]
    }
}

/// Hermitian matrix with the given real coordinates.
pub fn hermitian_from_coords(n: usize, coords: &[f64]) -> Result<ComplexMatrix> {
    if coords.len() != n * n {
        return Err(Error::Dimension(format!(
            "{n}x{n} Hermitian matrix has {} real coordinates, got {}",
            n * n,
            coords.len()
        )));
    }
    let mut m = DMatrix::zeros(n, n);
    for (k, &c) in coords.iter().enumerate() {
        for (i, j, v) in generator_entries(n, k) {
            m[(i, j)] += v * c;
        }
    }
    ComplexMatrix::from_dmatrix(m)
}

/// Real coordinates of the Hermitian part of `m`.
pub fn hermitian_coords(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    out.extend((0..n).map(|k| m.get(k, k).re));
    let avg = |i: usize, j: usize| (m.get(i, j) + m.get(j, i).conj()) * 0.5;
    out.extend(upper_pairs(n).map(|(i, j)| SQRT_2 * avg(i, j).re));
    out.extend(upper_pairs(n).map(|(i, j)| SQRT_2 * avg(i, j).im));
    out
}

/// Real coordinates of the anti-Hermitian part of `k`.
fn antihermitian_coords(k: &DMatrix<Complex64>, out: &mut [f64]) {
    let n = k.nrows();
    let m = upper_count(n);
    for d in 0..n {
        out[d] = k[(d, d)].im;
    }
    for (p, (i, j)) in upper_pairs(n).enumerate() {
        let z = (k[(i, j)] - k[(j, i)].conj()) * 0.5;
        out[n + p] = SQRT_2 * z.re;
        out[n + m + p] = SQRT_2 * z.im;
    }
}

/// Real matrix of `Θ ↦ Θ·op − op†·Θ` in the Hermitian/anti-Hermitian
/// coordinates, one column per generator.
pub(crate) fn intertwining_operator(op: &ComplexMatrix) -> DMatrix<f64> {
    let n = op.nrows();
    let a = op.as_dmatrix();
    let dim = n * n;
    let mut out = DMatrix::zeros(dim, dim);
    let mut k_mat = DMatrix::<Complex64>::zeros(n, n);
    let mut col = vec![0.0; dim];
    for k in 0..dim {
        k_mat.fill(Complex64::new(0.0, 0.0));
        for (r, c, v) in generator_entries(n, k) {
            // (G·op)_{r,b} += v·op_{c,b};  (op†·G)_{a,c} += conj(op_{r,a})·v
            for b in 0..n {
                k_mat[(r, b)] += v * a[(c, b)];
            }
            for row in 0..n {
                k_mat[(row, c)] -= a[(r, row)].conj() * v;
            }
        }
        antihermitian_coords(&k_mat, &mut col);
        out.column_mut(k).copy_from_slice(&col);
    }
    out
}

/// `‖ΘA − A†Θ‖_F / (‖Θ‖_F‖A‖_F)`, zero when either factor vanishes.
pub fn intertwining_residual(op: &ComplexMatrix, theta: &ComplexMatrix) -> f64 {
    let num = (&(theta * op) - &(&op.adjoint() * theta)).frobenius_norm();
    let den = theta.frobenius_norm() * op.frobenius_norm();
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Real-linear space of Hermitian matrices intertwining a Hamiltonian with
/// its adjoint.
#[derive(Debug, Clone, Serialize)]
pub struct MetricSpace {
    pub dimension: usize,
    pub residual: f64,
    pub basis: Vec<ComplexMatrix>,
    #[serde(skip)]
    pub hamiltonian: ComplexMatrix,
}

impl MetricSpace {
    pub(crate) fn from_basis(hamiltonian: ComplexMatrix, basis: Vec<ComplexMatrix>) -> Self {
        let residual = basis
            .iter()
            .map(|b| intertwining_residual(&hamiltonian, b))
            .fold(0.0, f64::max);
        Self {
            dimension: basis.len(),
            residual,
            basis,
            hamiltonian,
        }
    }

    pub fn size(&self) -> usize {
        self.hamiltonian.nrows()
    }

    /// `Σ_k c_k B_k`.
    pub fn combine(&self, coefficients: &[f64]) -> Result<ComplexMatrix> {
        if coefficients.len() != self.dimension {
            return Err(Error::Dimension(format!(
                "metric space has dimension {}, got {} coefficients",
                self.dimension,
                coefficients.len()
            )));
        }
        let n = self.size();
        let mut acc = ComplexMatrix::zeros(n, n);
        for (c, b) in coefficients.iter().zip(&self.basis) {
            acc = &acc + &b.scale_real(*c);
        }
        Ok(acc)
    }

    /// Orthogonal projection coefficients `Re tr(B_k† Θ)`.
    pub fn coefficients_of(&self, theta: &ComplexMatrix) -> Result<Vec<f64>> {
        require_same_shape(theta, &self.hamiltonian)?;
        Ok(self.basis.iter().map(|b| b.real_inner(theta)).collect())
    }

    /// `‖Θ − P(Θ)‖_F` for the orthogonal projection `P` onto the span.
    pub fn projection_residual(&self, theta: &ComplexMatrix) -> Result<f64> {
        let c = self.coefficients_of(theta)?;
        Ok((theta - &self.combine(&c)?).frobenius_norm())
    }
}

/// Orthonormal basis of all Hermitian `Θ` with `ΘH = H†Θ`.
///
/// An empty kernel is reported as dimension 0, not as an error.
pub fn solve_metric_space(h: &ComplexMatrix, _tol: &Tolerance) -> Result<MetricSpace> {
    require_square(h)?;
    let n = h.nrows();
    let op = intertwining_operator(h);
    let scale = real_sigma_max(&op).max(h.frobenius_norm());
    let kernel = real_null_space(&op, RANK_RTOL * scale);
    let basis = (0..kernel.ncols())
        .map(|k| {
            let coords: Vec<f64> = kernel.column(k).iter().copied().collect();
            hermitian_from_coords(n, &coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MetricSpace::from_basis(h.clone(), basis))
}

/// Strictly positive spectral weights `s_m`, one per eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricWeights(Vec<f64>);

impl MetricWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Dimension("weights must be non-empty".into()));
        }
        if let Some(bad) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::Domain(format!(
                "weights must be positive and finite, got {bad}"
            )));
        }
        Ok(Self(weights))
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `Σ_m s_m |m⟩⟩⟨⟨m|` over the left eigenvectors.
///
/// Refuses complex or degenerate spectra, where no positive metric of this
/// form exists.
pub fn metric_from_weights(
    sys: &BiorthogonalSystem,
    weights: &MetricWeights,
    tol: &Tolerance,
) -> Result<ComplexMatrix> {
    let n = sys.dimension();
    if weights.0.len() != n {
        return Err(Error::Dimension(format!(
            "{n} eigenvalues but {} weights",
            weights.0.len()
        )));
    }
    let scale = sys
        .eigenvalues()
        .iter()
        .map(|e| e.norm())
        .fold(0.0, f64::max);
    let max_imag = sys.max_imag();
    if max_imag > tol.bound(scale) {
        return Err(Error::NoPositiveMetric(format!(
            "spectrum is complex (max |Im E| = {max_imag:e})"
        )));
    }
    if let Some(&(i, j)) = sys.degenerate_pairs().first() {
        return Err(Error::NoPositiveMetric(format!(
            "spectrum is degenerate at indices ({i}, {j})"
        )));
    }
    let l = sys.left_vectors().as_dmatrix();
    let weighted = DMatrix::from_fn(n, n, |i, j| l[(i, j)] * weights.0[j]);
    Ok(ComplexMatrix::wrap(weighted * l.adjoint()).hermitian_part())
}

/// Rescales `theta` so its trace equals its dimension.
pub fn normalize_trace(theta: &ComplexMatrix) -> Result<ComplexMatrix> {
    let tr = theta.trace().re;
    if tr == 0.0 || !tr.is_finite() {
        return Err(Error::Domain("cannot normalize a traceless matrix".into()));
    }
    Ok(theta.scale_real(theta.nrows() as f64 / tr))
}

/// A point in the metric space together with its positivity verdict.
#[derive(Debug, Clone, Serialize)]
pub struct PositivityProbe {
    pub theta: ComplexMatrix,
    pub positive: bool,
    pub min_eigenvalue: f64,
}

pub fn positivity_region(
    space: &MetricSpace,
    coefficients: &[f64],
    tol: &Tolerance,
) -> Result<PositivityProbe> {
    let theta = space.combine(coefficients)?.hermitian_part();
    let min_eigenvalue = min_eigenvalue(&theta, tol)?;
    let positive = is_positive_definite(&theta, tol)?;
    Ok(PositivityProbe {
        theta,
        positive,
        min_eigenvalue,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntertwiningCheck {
    pub residual: f64,
    pub holds: bool,
}

/// Tests `ΘH = H†Θ` in multiplicative form, without inverting `Θ`.
pub fn check_quasi_hermiticity(
    h: &ComplexMatrix,
    theta: &ComplexMatrix,
    tol: &Tolerance,
) -> Result<IntertwiningCheck> {
    require_square(h)?;
    require_same_shape(h, theta)?;
    let residual = intertwining_residual(h, theta);
    Ok(IntertwiningCheck {
        residual,
        holds: residual <= tol.rel_eps,
    })
}
