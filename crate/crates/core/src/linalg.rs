//! Dense complex matrices and the handful of decompositions the rest of the
//! crate is built on.
//!
//! `ComplexMatrix` wraps a `nalgebra::DMatrix<Complex64>` and guarantees every
//! entry is finite at construction. Eigenvalue routines return results in a
//! deterministic order with a fixed eigenvector phase, so downstream pairing
//! and regression fixtures are reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, Schur, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative eigenpair residual accepted from `eig_general`.
pub const EIG_RESIDUAL_RTOL: f64 = 1e-8;

const MAX_SWEEPS_PER_DIM: usize = 1000;

/// Absolute/relative tolerance pair used for every equality and positivity
/// verdict in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        if !abs_eps.is_finite() || !rel_eps.is_finite() {
            return Err(Error::Tolerance("tolerances must be finite".into()));
        }
        if abs_eps < 0.0 || rel_eps < 0.0 {
            return Err(Error::Tolerance("tolerances must be non-negative".into()));
        }
        if abs_eps == 0.0 && rel_eps == 0.0 {
            return Err(Error::Tolerance(
                "at least one of abs_eps, rel_eps must be positive".into(),
            ));
        }
        Ok(Self { abs_eps, rel_eps })
    }

    /// `abs_eps + rel_eps * scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 1e-10,
            rel_eps: 1e-10,
        }
    }
}

/// Dense complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Self::from_dmatrix(DMatrix::from_row_slice(rows, cols, &entries))
    }

    /// Builds a matrix from real rows. All rows must have equal length.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::from_row_major(n_rows, n_cols, entries)
    }

    /// Builds a matrix from complex rows.
    pub fn from_complex_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(n_rows, n_cols, entries)
    }

    pub fn from_dmatrix(inner: DMatrix<Complex64>) -> Result<Self> {
        if inner.nrows() == 0 || inner.ncols() == 0 {
            return Err(Error::Dimension("matrix must be non-empty".into()));
        }
        for j in 0..inner.ncols() {
            for i in 0..inner.nrows() {
                let z = inner[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self { inner })
    }

    pub(crate) fn wrap(inner: DMatrix<Complex64>) -> Self {
        debug_assert!(inner.iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        Self { inner }
    }

    pub fn identity(n: usize) -> Self {
        Self::wrap(DMatrix::identity(n, n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::wrap(DMatrix::zeros(rows, cols))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::wrap(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }))
    }

    pub fn nrows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn into_dmatrix(self) -> DMatrix<Complex64> {
        self.inner
    }

    /// Entries in row-major order.
    pub fn row_major(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.nrows() * self.ncols());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                out.push(self.inner[(i, j)]);
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        self.inner.column(j).iter().copied().collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::wrap(self.inner.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::wrap(self.inner.map(|z| z * factor))
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        Self::wrap(self.inner.map(|z| z * factor))
    }

    /// Real Frobenius inner product `Re tr(self† other)`.
    pub fn real_inner(&self, other: &Self) -> f64 {
        self.inner
            .iter()
            .zip(other.inner.iter())
            .map(|(a, b)| (a.conj() * b).re)
            .sum()
    }

    /// `(m + m†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::wrap((&self.inner + self.inner.adjoint()).map(|z| z * 0.5))
    }

    pub fn determinant(&self) -> Result<Complex64> {
        require_square(self)?;
        Ok(self.inner.clone().determinant())
    }

    /// Matrix inverse; fails when the smallest singular value is at or below
    /// `abs_eps`.
    pub fn inverse(&self, tol: &Tolerance) -> Result<Self> {
        require_square(self)?;
        let sigma_min = smallest_singular_value(self);
        if sigma_min <= tol.abs_eps {
            return Err(Error::Singular { sigma_min });
        }
        self.inner
            .clone()
            .try_inverse()
            .map(Self::wrap)
            .ok_or(Error::Singular { sigma_min })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.inner
            .iter()
            .zip(other.inner.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix {}x{} [", self.nrows(), self.ncols())?;
        for i in 0..self.nrows() {
            write!(f, "[")?;
            for j in 0..self.ncols() {
                let z = self.inner[(i, j)];
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:.6}{:+.6}i", z.re, z.im)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix::wrap(&self.inner $op &rhs.inner)
            }
        }

        impl $trait<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix::wrap(self.inner $op rhs.inner)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        ComplexMatrix::wrap(-&self.inner)
    }
}

pub(crate) fn require_square(m: &ComplexMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )))
    }
}

pub(crate) fn require_same_shape(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.nrows() == b.nrows() && a.ncols() == b.ncols() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "{}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )))
    }
}

/// Conjugate transpose.
pub fn adjoint(m: &ComplexMatrix) -> ComplexMatrix {
    m.adjoint()
}

/// `‖m − m†‖_F ≤ abs_eps + rel_eps·‖m‖_F`.
pub fn is_hermitian(m: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    require_square(m)?;
    let defect = (m - &m.adjoint()).frobenius_norm();
    Ok(defect <= tol.bound(m.frobenius_norm()))
}

pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = m.inner.singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

pub fn smallest_singular_value(m: &ComplexMatrix) -> f64 {
    singular_values(m).last().copied().unwrap_or(0.0)
}

/// Orders eigenvalues lexicographically by (real part, imaginary part).
pub fn lexicographic(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Rescales a vector to unit 2-norm and rotates its phase so the entry of
/// largest modulus is real and positive. Among entries within a relative
/// 1e-10 of the largest modulus, the first one wins.
pub(crate) fn normalize_with_phase(v: &mut [Complex64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let max_mod = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pivot = v
        .iter()
        .position(|z| z.norm() >= max_mod * (1.0 - 1e-10))
        .unwrap_or(0);
    let phase = v[pivot] / v[pivot].norm();
    let factor = phase.conj() / norm;
    for z in v.iter_mut() {
        *z *= factor;
    }
    v[pivot] = Complex64::new(v[pivot].re, 0.0);
}

/// Eigenvalues and unit right eigenvectors of a general square matrix.
#[derive(Debug, Clone)]
pub struct GeneralEigen {
    /// Sorted by (Re, Im) ascending.
    pub eigenvalues: Vec<Complex64>,
    /// Column `k` pairs with `eigenvalues[k]`.
    pub vectors: ComplexMatrix,
}

/// General eigendecomposition via complex Schur form and back-substitution on
/// the triangular factor.
///
/// Defective matrices do not fail: repeated diagonal entries in the Schur
/// factor are perturbed to `eps·‖T‖` during back-substitution, which yields
/// nearly parallel eigenvectors for a Jordan block.
pub fn eig_general(m: &ComplexMatrix) -> Result<GeneralEigen> {
    require_square(m)?;
    let n = m.nrows();
    let m_norm = m.frobenius_norm();
    if m_norm == 0.0 {
        return Ok(GeneralEigen {
            eigenvalues: vec![Complex64::new(0.0, 0.0); n],
            vectors: ComplexMatrix::identity(n),
        });
    }

    let schur = Schur::try_new(m.inner.clone(), f64::EPSILON, MAX_SWEEPS_PER_DIM * n).ok_or(
        Error::Convergence {
            residual: f64::INFINITY,
        },
    )?;
    let (q, t) = schur.unpack();

    let t_norm = t.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let smin = (f64::EPSILON * t_norm).max(f64::MIN_POSITIVE);

    let mut pairs: Vec<(Complex64, Vec<Complex64>)> = Vec::with_capacity(n);
    for k in 0..n {
        let lambda = t[(k, k)];
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        x[k] = Complex64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let mut s = Complex64::new(0.0, 0.0);
            for j in (i + 1)..=k {
                s += t[(i, j)] * x[j];
            }
            let mut d = t[(i, i)] - lambda;
            if d.norm() < smin {
                d = Complex64::new(smin, 0.0);
            }
            x[i] = -s / d;
            let big = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if big > 1e150 {
                for z in x.iter_mut() {
                    *z /= big;
                }
            }
        }
        let mut v: Vec<Complex64> = (0..n)
            .map(|r| (0..=k).map(|c| q[(r, c)] * x[c]).sum())
            .collect();
        normalize_with_phase(&mut v);
        pairs.push((lambda, v));
    }

    pairs.sort_by(|a, b| lexicographic(&a.0, &b.0));

    let mut worst = 0.0_f64;
    for (lambda, v) in &pairs {
        let r: f64 = (0..n)
            .map(|i| {
                let mv: Complex64 = (0..n).map(|j| m.inner[(i, j)] * v[j]).sum();
                (mv - lambda * v[i]).norm_sqr()
            })
            .sum::<f64>()
            .sqrt();
        worst = worst.max(r);
    }
    if worst.is_nan() || worst > EIG_RESIDUAL_RTOL * m_norm {
        return Err(Error::Convergence { residual: worst });
    }

    let eigenvalues = pairs.iter().map(|p| p.0).collect();
    let vectors = DMatrix::from_fn(n, n, |i, j| pairs[j].1[i]);
    Ok(GeneralEigen {
        eigenvalues,
        vectors: ComplexMatrix::wrap(vectors),
    })
}

/// Real eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Hermitian eigendecomposition. The Hermiticity precondition is checked with
/// the default tolerance.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen> {
    eig_hermitian_with(m, &Tolerance::default())
}

pub fn eig_hermitian_with(m: &ComplexMatrix, tol: &Tolerance) -> Result<HermitianEigen> {
    if !is_hermitian(m, tol)? {
        return Err(Error::Precondition("matrix is not Hermitian".into()));
    }
    let n = m.nrows();
    let sym = m.hermitian_part();
    let eig = SymmetricEigen::try_new(sym.inner, f64::EPSILON, MAX_SWEEPS_PER_DIM * n).ok_or(
        Error::Convergence {
            residual: f64::INFINITY,
        },
    )?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        let mut v: Vec<Complex64> = eig.eigenvectors.column(k).iter().copied().collect();
        normalize_with_phase(&mut v);
        for (i, z) in v.into_iter().enumerate() {
            vectors[(i, col)] = z;
        }
    }
    Ok(HermitianEigen {
        eigenvalues,
        vectors: ComplexMatrix::wrap(vectors),
    })
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &ComplexMatrix, tol: &Tolerance) -> Result<f64> {
    Ok(eig_hermitian_with(m, tol)?.eigenvalues[0])
}

/// Positive definite iff the smallest eigenvalue exceeds `abs_eps`.
pub fn is_positive_definite(m: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    Ok(min_eigenvalue(m, tol)? > tol.abs_eps)
}

/// Orthonormal basis of the numerical null space of a real matrix, one
/// column per kernel direction. Singular values at or below `threshold`
/// count as zero.
pub(crate) fn real_null_space(a: &DMatrix<f64>, threshold: f64) -> DMatrix<f64> {
    let ncols = a.ncols();
    if a.nrows() < ncols {
        let mut padded = DMatrix::zeros(ncols, ncols);
        padded.view_mut((0, 0), (a.nrows(), ncols)).copy_from(a);
        return real_null_space(&padded, threshold);
    }
    let svd = SVD::new(a.clone(), false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let null_rows: Vec<usize> = (0..ncols)
        .filter(|&k| svd.singular_values[k] <= threshold)
        .collect();
    let mut basis = DMatrix::zeros(ncols, null_rows.len());
    for (col, &k) in null_rows.iter().enumerate() {
        let mut v: Vec<f64> = v_t.row(k).iter().copied().collect();
        let pivot = v
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .map_or(0, |(i, _)| i);
        if v[pivot] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        for (i, x) in v.into_iter().enumerate() {
            basis[(i, col)] = x;
        }
    }
    basis
}

/// Largest singular value of a real matrix.
pub(crate) fn real_sigma_max(a: &DMatrix<f64>) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    a.singular_values().iter().copied().fold(0.0, f64::max)
}
