//! Exact invariants of braid closures and iterated torus links.
//!
//! Seifert matrices, signatures, nullities, Conway potentials and determinants of
//! closed braids; splice diagrams with the Eisenbud-Neumann and Cimasoni formulas;
//! skein systems of cyclically symmetric polynomials; closed-form signatures of two
//! braid families; generalized skein relations; and an arithmetic prohibition
//! engine for complex schemes of real plane curves.

pub mod algebra;
pub mod braid;
pub mod closedforms;
pub mod error;
pub mod genskein;
pub mod prohibitor;
pub mod seifert;
pub mod skeinpoly;
pub mod splice;

pub use algebra::{GaussianInteger, LaurentPolynomial, SymmetricIntMatrix};
pub use braid::{BraidWord, FamilyParams};
pub use splice::{NamedDiagram, SpliceDiagram};
pub use error::{Error, Result};
