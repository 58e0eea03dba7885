//! Exact structure-constant engine for Hom-Novikov superalgebras.
//!
//! All arithmetic is over the rationals. An algebra is given by its graded
//! basis, structure constants and an even twisting map; the modules below check
//! the axioms, build new algebras from old ones, compute second cohomology and
//! manipulate truncated formal deformations.

#[cfg(feature = "cli")]
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod deformation;
pub mod document;
pub mod error;
pub mod exactlin;
pub mod samples;
pub mod superalgebra;

pub use error::{Error, Result};
pub use exactlin::{GradedSpace, Matrix, Parity, Scalar, Subspace, Vector};
pub use superalgebra::{BilinearForm, EvenMap, SuperAlgebra, Verdict, Violation};
pub use document::{AlgebraDocument, DeformationDocument, Document};
