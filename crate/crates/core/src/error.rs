use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("eigensolver did not converge (residual {residual:e})")]
    Convergence { residual: f64 },

    /// Left/right overlap collapsed: the spectrum is defective at this pair.
    #[error("exceptional point: eigenpair overlap {overlap:e} at indices ({i}, {j})")]
    ExceptionalPoint { i: usize, j: usize, overlap: f64 },

    #[error("no positive-definite metric exists: {0}")]
    NoPositiveMetric(String),

    #[error("matrix is not invertible (smallest singular value {sigma_min:e})")]
    Singular { sigma_min: f64 },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("observable imposes no constraint: {0}")]
    Trivial(String),

    #[error("invalid tolerance: {0}")]
    Tolerance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
