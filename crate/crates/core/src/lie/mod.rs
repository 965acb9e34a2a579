//! Structural Lie algebra computations over Q(i).
//!
//! At finite dimension E-solvability coincides with solvability, so only the latter is
//! implemented; `is_solvable` decides it through the derived series.

pub mod algebra;
pub mod forms;
pub mod nil;
pub mod products;
pub mod series;

pub use algebra::{ad_matrix, bracket_span, center, is_ideal, is_scalar_set, lie_closure, LieAlgebra};
pub use forms::{cartan_test, killing_form, killing_radical, trace_orthogonal_ideal, KillingGram};
pub use nil::{
    ad_image, commutators_are_engel, consists_of_engel, engel_sum_check, is_engel_element, is_nil_subspace,
    polarization_test, polarization_test_tagged,
};
pub use products::jordan_triple_identity_holds;
pub use series::{
    derived_series, derived_subspace, is_nilpotent_lie, is_solvable, lower_central_series, SeriesKind,
    SeriesReport,
};
