//! The 3-dimensional Sklyanin algebra from (curve, translation, embedding)
//! data: relation spaces by evaluation, graded quotient arithmetic, the
//! central degree-3 element, the line towers L_n / M_n / N_n, and the
//! truncated faithfulness certificates for A/AL.

mod certify;
mod context;
mod echelon;
mod tensor;
mod tower;

pub use certify::{
    al_slice_cosets, anchors, faithfulness_certificate_sklyanin, intersect_aln_slices,
    left_ideal_slice, membership_in_al, truncated_annihilator_al, verify_divisor_of_nn,
    verify_nn_not_in_al,
};
pub use context::{AlgebraElement, SklyaninContext};
pub use echelon::SparseEchelon;
pub use tensor::{dim_of_degree, TensorElement};
pub use tower::{construct_tower, SklyaninTower};

use thiserror::Error;

use crate::ecurve::CurveError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SklyaninError {
    #[error("translation point has torsion order within bound {bound}")]
    TorsionPoint { bound: u32 },
    #[error("relation space in degree {degree}: expected dimension {expected}, got {got}")]
    RelationSpaceDim { degree: usize, expected: usize, got: usize },
    #[error("evaluation rank not stabilized in degree {degree} with {samples} samples")]
    NotStabilized { degree: usize, samples: usize },
    #[error("degree {degree} needs {needed} samples, got {got}")]
    InsufficientSamples { degree: usize, needed: usize, got: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("central element system has solution dimension {solution_dim}, expected 1")]
    DegenerateCentral { solution_dim: usize },
    #[error("tower hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("relation-space inconsistency: {0}")]
    RelationInconsistency(String),
    #[error("operation requires a degree-{expected} element, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
