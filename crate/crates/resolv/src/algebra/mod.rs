//! Exact arithmetic foundations: finite fields GF(p^e), dense matrices
//! over them, and subspace enumeration.

pub mod field;
pub mod matrix;
pub mod subspaces;

pub use field::{FieldElement, FiniteField};
pub use matrix::MatrixGF;
pub use subspaces::{binomial, gaussian_binomial, SubspaceIter};
