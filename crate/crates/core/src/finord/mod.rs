//! Finite preorders, monotone maps, and complete posets, plus the
//! order-theoretic constructions everything else in the crate reduces to.

pub mod constructions;
pub mod epis;
pub mod map;
pub mod poset;
pub mod preorder;

pub use constructions::{
    coequalizer, coproduct, equalizer, exponential, product, pullback, Exponential,
};
pub use epis::{
    effective_descent_failure, is_effective_descent_ord, is_regular_epi_ord,
    is_stable_regular_epi_ord, regular_epi_failure, stable_failure,
};
pub use map::{monotone_maps, MonotoneMap};
pub use poset::{BasePoset, Direction};
pub use preorder::FinPreorder;
