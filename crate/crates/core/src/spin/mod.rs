//! Clifford algebras, spin lifts, and parallel spinors.

pub mod clifford;
pub mod closed_form;
pub mod lift;
pub mod parallel;
pub mod weights;

pub use clifford::{clifford_generators, CliffordRep};
pub use closed_form::{closed_form_action, CliffordElement};
pub use lift::{adapted_spin_lift, spin_lift, AdaptedBasis, FramedSpinModule};
pub use parallel::{
    annihilator_dim, entry_parallel_spinor_dim, parallel_spinor_dim, parallel_spinor_dim_extension, spin_holonomy,
    spinor_lower_bound, SpinorLowerBound,
};
pub use weights::{su2_weight_count, Su2Rep};
