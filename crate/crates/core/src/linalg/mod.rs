//! Exact linear algebra over the Gaussian rationals, plus the numeric conversion layer.

pub mod mat;
mod modular;
pub mod numeric;
pub mod scalar;
pub mod subspace;

pub use mat::{bracket, is_nilpotent_exact, jordan_product, triple_product, Mat};
pub use numeric::{to_numeric, NumMat};
pub use scalar::GaussianRational;
pub use subspace::{canonicalize, subspace_contains, subspace_intersect, subspace_sum, Subspace};
