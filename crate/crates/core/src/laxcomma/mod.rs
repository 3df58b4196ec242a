//! Monotone maps into a fixed complete poset `X`, with triangles required
//! to commute only up to `<=`.
//!
//! An object is a pair `(Y, a)` with `a : Y -> X` monotone; a morphism
//! `f : (Y, a) -> (Z, b)` is a monotone `f : Y -> Z` with `a <= b . f`
//! pointwise, and `f <= g` between parallel morphisms means pointwise
//! comparison in `Z`.  The forgetful functor to plain preorders admits
//! initial lifts, which is where all limits come from; colimits are
//! computed underneath and re-equipped with the least compatible
//! structure.

pub mod colimits;
pub mod exponential;
pub mod lifts;
pub mod limits;
pub mod object;
pub mod tensors;

pub use colimits::{coequalizer_lax, coproduct_lax};
pub use exponential::{
    curry, exponential_lax, is_exponentiable_lax, is_exponentiable_strict,
    non_exponentiable_points, uncurry, LaxExponential,
};
pub use lifts::initial_lift;
pub use limits::{equalizer_lax, product_lax, pullback_lax};
pub use object::{hom, hom_preorder, lax_object_iso, leq_2cell, LaxMorphism, LaxObject};
pub use tensors::{copower, power, Power};
