//! Numeric eigenanalysis, triangularization certificates and irreducibility decisions.

pub mod eigen;
pub mod irreducible;
pub mod triangularize;

pub use eigen::{
    eig_numeric, generalized_eigenspace_numeric, numeric_kernel, rational_eigenvalues, schur, spectral_radius,
    NumSubspace, Schur, DEFAULT_TOL,
};
pub use irreducible::{
    assoc_closure, assoc_closure_dim, decide_irreducible, invariance_residual, is_invariant, orbit_span,
    IrreducibilityVerdict, Witness,
};
pub use triangularize::{triangularize_solvable, verify_flag, Flag, FlagBasis, FlagReport};
