//! Biorthogonal eigensystems of non-Hermitian matrices.
//!
//! Right eigenvectors `|n⟩` come from `H`, left eigenvectors `|n⟩⟩` from `H†`.
//! After pairing by eigenvalue, left vectors are rescaled so that
//! `⟨⟨n|m⟩ = δ_nm`. A vanishing pre-rescaling overlap means the spectrum is
//! defective, which is how exceptional points are detected.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{eig_general, lexicographic, require_square, ComplexMatrix, Tolerance};

/// Overlaps `|⟨⟨n|n⟩|` of unit vectors below this flag an exceptional point.
pub const EXCEPTIONAL_OVERLAP: f64 = 1e-6;

/// Eigenvalues closer than `DEGENERACY_RTOL · (1 + max|E|)` are degenerate.
pub const DEGENERACY_RTOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct BiorthogonalSystem {
    eigenvalues: Vec<Complex64>,
    right: ComplexMatrix,
    left: ComplexMatrix,
}

impl BiorthogonalSystem {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    /// Columns are the right eigenvectors `|n⟩`, unit norm.
    pub fn right_vectors(&self) -> &ComplexMatrix {
        &self.right
    }

    /// Columns are the left eigenvectors `|n⟩⟩`, scaled so `⟨⟨n|n⟩ = 1`.
    pub fn left_vectors(&self) -> &ComplexMatrix {
        &self.left
    }

    /// `L†R`; the identity for a valid system.
    pub fn overlap_matrix(&self) -> ComplexMatrix {
        &self.left.adjoint() * &self.right
    }

    /// Largest imaginary part over the spectrum.
    pub fn max_imag(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|e| e.im.abs())
            .fold(0.0, f64::max)
    }

    /// Index pairs `(i, j)`, `i < j`, whose eigenvalues coincide under the
    /// degeneracy gap test.
    pub fn degenerate_pairs(&self) -> Vec<(usize, usize)> {
        degenerate_pairs(&self.eigenvalues)
    }
}

/// Reality, degeneracy and exceptional-point summary of a spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub all_real: bool,
    pub max_imag: f64,
    pub degenerate_pairs: Vec<(usize, usize)>,
    pub exceptional: bool,
    /// Reciprocal of the smallest left/right overlap before rescaling.
    pub condition_estimate: f64,
}

fn gap_bound(eigenvalues: &[Complex64]) -> f64 {
    let scale = eigenvalues.iter().map(|e| e.norm()).fold(0.0, f64::max);
    DEGENERACY_RTOL * (1.0 + scale)
}

fn degenerate_pairs(eigenvalues: &[Complex64]) -> Vec<(usize, usize)> {
    let gap = gap_bound(eigenvalues);
    let n = eigenvalues.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if (eigenvalues[i] - eigenvalues[j]).norm() <= gap {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Groups indices into clusters of mutually degenerate eigenvalues.
fn clusters(eigenvalues: &[Complex64]) -> Vec<Vec<usize>> {
    let n = eigenvalues.len();
    let mut label: Vec<usize> = (0..n).collect();
    for (i, j) in degenerate_pairs(eigenvalues) {
        let (from, to) = (label[j].max(label[i]), label[j].min(label[i]));
        for l in label.iter_mut() {
            if *l == from {
                *l = to;
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        let members: Vec<usize> = (0..n).filter(|&k| label[k] == root).collect();
        if !members.is_empty() {
            out.push(members);
        }
    }
    out
}

/// Output of the shared eigen-analysis: paired (but not yet rescaled) left
/// vectors plus the worst cluster overlap.
struct Paired {
    eigenvalues: Vec<Complex64>,
    right: DMatrix<Complex64>,
    left: DMatrix<Complex64>,
    clusters: Vec<Vec<usize>>,
    /// Smallest singular value of each cluster's overlap block.
    cluster_overlap: Vec<f64>,
}

fn pair_left_right(h: &ComplexMatrix) -> Result<Paired> {
    require_square(h)?;
    let right = eig_general(h)?;
    let left = eig_general(&h.adjoint())?;
    let n = h.nrows();

    // Left eigenvalue μ of H† corresponds to E = conj(μ).
    let mut left_order: Vec<usize> = (0..n).collect();
    let conj_left: Vec<Complex64> = left.eigenvalues.iter().map(|z| z.conj()).collect();
    left_order.sort_by(|&a, &b| lexicographic(&conj_left[a], &conj_left[b]));

    let scale = 1.0
        + right
            .eigenvalues
            .iter()
            .map(|e| e.norm())
            .fold(0.0, f64::max);
    let consistent = left_order
        .iter()
        .zip(&right.eigenvalues)
        .all(|(&k, e)| (conj_left[k] - e).norm() <= 1e-6 * scale);
    if !consistent {
        // Sort orders disagree (e.g. complex pairs with round-off in the real
        // part); fall back to greedy nearest matching.
        let mut free: Vec<usize> = (0..n).collect();
        left_order.clear();
        for e in &right.eigenvalues {
            let pos = free
                .iter()
                .enumerate()
                .min_by(|a, b| {
                    (conj_left[*a.1] - e)
                        .norm()
                        .total_cmp(&(conj_left[*b.1] - e).norm())
                })
                .map(|(p, _)| p)
                .expect("one free index per eigenvalue");
            left_order.push(free.remove(pos));
        }
    }

    let r = right.vectors.into_dmatrix();
    let l_raw = left.vectors.as_dmatrix();
    let l = DMatrix::from_fn(n, n, |i, j| l_raw[(i, left_order[j])]);

    let clusters = clusters(&right.eigenvalues);
    let cluster_overlap = clusters
        .iter()
        .map(|members| {
            let block = overlap_block(&l, &r, members);
            block
                .singular_values()
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min)
        })
        .collect();

    Ok(Paired {
        eigenvalues: right.eigenvalues,
        right: r,
        left: l,
        clusters,
        cluster_overlap,
    })
}

fn overlap_block(
    l: &DMatrix<Complex64>,
    r: &DMatrix<Complex64>,
    members: &[usize],
) -> DMatrix<Complex64> {
    let k = members.len();
    DMatrix::from_fn(k, k, |a, b| {
        l.column(members[a]).dotc(&r.column(members[b]))
    })
}

fn nearest_other(eigenvalues: &[Complex64], n: usize) -> usize {
    (0..eigenvalues.len())
        .filter(|&k| k != n)
        .min_by(|&a, &b| {
            (eigenvalues[a] - eigenvalues[n])
                .norm()
                .total_cmp(&(eigenvalues[b] - eigenvalues[n]).norm())
        })
        .unwrap_or(n)
}

/// Paired, biorthonormal left/right eigenvectors of `h`.
///
/// Within a cluster of degenerate eigenvalues the left vectors are
/// re-mixed so the overlap block becomes the identity; a singular overlap
/// block (smallest singular value below `EXCEPTIONAL_OVERLAP`) is reported
/// as an exceptional point.
pub fn biorthogonal_system(h: &ComplexMatrix, _tol: &Tolerance) -> Result<BiorthogonalSystem> {
    let Paired {
        eigenvalues,
        right,
        mut left,
        clusters,
        cluster_overlap,
    } = pair_left_right(h)?;

    for (members, &overlap) in clusters.iter().zip(&cluster_overlap) {
        if overlap.is_nan() || overlap < EXCEPTIONAL_OVERLAP {
            let i = members[0];
            let j = if members.len() > 1 {
                members[1]
            } else {
                nearest_other(&eigenvalues, i)
            };
            return Err(Error::ExceptionalPoint {
                i: i.min(j),
                j: i.max(j),
                overlap,
            });
        }
        let block = overlap_block(&left, &right, members);
        let inv = block
            .try_inverse()
            .ok_or(Error::ExceptionalPoint {
                i: members[0],
                j: members[0],
                overlap,
            })?
            .adjoint();
        let k = members.len();
        let old: Vec<Vec<Complex64>> = members
            .iter()
            .map(|&m| left.column(m).iter().copied().collect())
            .collect();
        for (b, &m) in members.iter().enumerate() {
            for row in 0..left.nrows() {
                left[(row, m)] = (0..k).map(|a| old[a][row] * inv[(a, b)]).sum();
            }
        }
    }

    Ok(BiorthogonalSystem {
        eigenvalues,
        right: ComplexMatrix::from_dmatrix(right)?,
        left: ComplexMatrix::from_dmatrix(left)?,
    })
}

/// Reality, degeneracy and exceptional-point classification. Exceptional
/// inputs are reported, never raised.
pub fn classify_spectrum(h: &ComplexMatrix, tol: &Tolerance) -> Result<SpectrumReport> {
    let paired = pair_left_right(h)?;
    let scale = paired
        .eigenvalues
        .iter()
        .map(|e| e.norm())
        .fold(0.0, f64::max);
    let max_imag = paired
        .eigenvalues
        .iter()
        .map(|e| e.im.abs())
        .fold(0.0, f64::max);
    let min_overlap = paired
        .cluster_overlap
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    let condition_estimate = if min_overlap > 0.0 {
        (1.0 / min_overlap).min(f64::MAX)
    } else {
        f64::MAX
    };
    Ok(SpectrumReport {
        all_real: max_imag <= tol.bound(scale),
        max_imag,
        degenerate_pairs: degenerate_pairs(&paired.eigenvalues),
        exceptional: min_overlap.is_nan() || min_overlap < EXCEPTIONAL_OVERLAP,
        condition_estimate,
    })
}

/// `Σ_n E_n |n⟩⟨⟨n|`.
pub fn spectral_reconstruct(sys: &BiorthogonalSystem) -> ComplexMatrix {
    spectral_map(sys, |e| e)
}

/// `Σ_n f(E_n) |n⟩⟨⟨n|`, i.e. `f(H)` for a diagonalizable `H`.
pub fn spectral_map(sys: &BiorthogonalSystem, f: impl Fn(Complex64) -> Complex64) -> ComplexMatrix {
    let n = sys.dimension();
    let r = sys.right.as_dmatrix();
    let l = sys.left.as_dmatrix();
    let values: Vec<Complex64> = sys.eigenvalues.iter().map(|&e| f(e)).collect();
    let scaled = DMatrix::from_fn(n, n, |i, j| r[(i, j)] * values[j]);
    ComplexMatrix::wrap(scaled * l.adjoint())
}
