//! Exact sparse linear algebra over ℚ.

mod echelon;
mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use echelon::{rank_of_vectors, rref};
pub use matrix::Matrix;
pub use scalar::{ParseScalarError, Scalar};
pub use sparse::SparseVec;
pub use subspace::{cohomology_at, QuotientPresentation, Subspace};
