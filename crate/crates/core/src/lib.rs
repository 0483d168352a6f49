pub mod cli;
pub mod error;
pub mod json;
pub mod linalg;
pub mod metric;
pub mod observables;
pub mod spectral;
pub mod symmetry;
pub mod toy;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Tolerance};
pub use num_complex::Complex64;
