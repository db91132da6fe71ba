//! Lie algebras, the PBW engine for U(g), and the truncated faithfulness
//! certificates for cyclic modules U/Ux.

mod algebra;
mod certify;
mod pbw;

pub use algebra::LieAlgebra;
pub use certify::{anchors, faithfulness_certificate_env, verify_nilpotent_faithful, verify_weight_identity};
pub use pbw::{Enveloping, PbwMonomial, UeaElement};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("bad Lie algebra data: {0}")]
    BadConstruction(String),
    #[error("bad element: {0}")]
    BadElement(String),
    #[error("element degree {degree} exceeds truncation cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
