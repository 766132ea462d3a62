//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::{kernel, rref, rref_with_transform, solve, tensor_matrix, Matrix};
pub use scalar::{Field, Scalar};
pub use subspace::{quotient_basis, Quotient, Subspace};
pub use vector::Vector;
