//! Verification workbench for faithful cyclic modules.
//!
//! Builds enveloping algebras, homogenized enveloping algebras and
//! 3-dimensional Sklyanin algebras with exact arithmetic, and certifies the
//! associated faithful-cyclic-module statements degree by degree: each
//! certificate is a finite, exact linear-algebra check whose caps are
//! recorded in the report.

pub mod linalg;
pub(crate) mod numutil;
pub mod report;

pub mod lie_env;
pub mod rees;

pub mod ecurve;
pub mod sklyanin;
