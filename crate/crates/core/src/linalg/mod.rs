//! Exact dense linear algebra over Q and prime fields: scalars, matrices with
//! reduced row-echelon form, and an echelonized subspace lattice.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{kernel_basis, rref, Matrix, RrefOutput};
pub use scalar::{Backend, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("scalar backend mismatch: expected {expected}, got {got}")]
    BackendMismatch { expected: String, got: String },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("row length mismatch: expected {expected}, got {got}")]
    NotRectangular { expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar: {0}")]
    BadScalar(String),
}
