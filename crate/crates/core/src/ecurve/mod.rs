//! Hesse cubics in P^2 with the collinearity group law, translation by a
//! fixed point, divisors, and torsion certification.

mod curve;
mod divisor;
mod roots;

pub use curve::{HesseCurve, LineForm, ProjPoint};
pub use divisor::{divisor_of_line, sigma_star, Divisor};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("(0:0:0) is not a projective point")]
    ZeroPoint,
    #[error("line construction needs two distinct points")]
    SamePoint,
    #[error("degenerate line")]
    DegenerateLine,
    #[error("line meets the curve in non-rational points")]
    NonRationalIntersection,
    #[error("root search exceeded the factorization bounds")]
    RootSearchOverflow,
    #[error("{0}")]
    RationalOnly(&'static str),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
