//! Exact computations for subgraded Lie algebras of matrices.
//!
//! Structural work (closures, series, trace forms, gradings, products) runs over the
//! Gaussian rationals Q(i) with no rounding. Eigenvalue work lives in [`spectral`] and
//! runs in double precision, with results re-verified exactly wherever they rationalize.

pub mod error;
pub mod grading;
pub mod lie;
pub mod linalg;
pub mod spectral;
pub mod structures;

#[cfg(test)]
mod test_support;

pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use linalg::{GaussianRational, Mat, NumMat, Subspace};
