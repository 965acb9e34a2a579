//! Finite abelian groups, subgraded Lie algebras and the constructions built on them.

pub mod ampliation;
pub mod automorphism;
pub mod derived;
pub mod group;
pub mod subgraded;

pub use ampliation::{
    ampliate, check_maptri, f_pi, maptri_report, homogeneous_commutators, regular_rep, AmpliationResult, BackMapEntry,
    HomogeneousCommutator, MaptriReport,
};
pub use automorphism::{
    endo_eigenspace_product_check, grading_from_automorphism, preserves_brackets, EndoReport, EndoViolation,
};
pub use derived::{coarsen_by_subgroup, l_double_prime, l_prime};
pub use group::{gamma_sharp, FinAbGroup, GroupElem, Quotient};
pub use subgraded::{subgraded_from_components, verify_subgrading, SubgradedAlgebra};
