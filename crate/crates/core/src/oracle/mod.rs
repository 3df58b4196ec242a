//! Cross-validation machinery: seeded random generation of structures,
//! brute-force universal-property verifiers, definitional oracles for the
//! quotient-map conditions, and the search for morphisms in the open gap.
//!
//! Everything here is deliberately independent of the closed-form
//! constructions it checks: verifiers enumerate competing candidates and
//! mediators instead of reusing the formulas, and the regular-epi oracles
//! recompute kernel pairs and coequalizers from scratch.

mod enumerate;
mod gen;
mod hunt;
mod kernel;
mod universal;

pub use enumerate::{lax_objects_over, preorder_reps, probe_objects};
pub use gen::{GenConfig, Generator};
pub use hunt::{canonical_form, gap_hunter, GapInstance};
pub use kernel::{
    regular_epi_oracle_lax, regular_epi_oracle_ord, stable_oracle, stable_oracle_failure,
};
pub use universal::{
    verify_coequalizer, verify_copower, verify_coproduct, verify_equalizer,
    verify_exponential_bijection, verify_exponential_naturality, verify_initial_lift,
    verify_initial_lift_with, verify_power, verify_product, verify_pullback,
    UniversalViolation,
};
