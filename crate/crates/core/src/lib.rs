//! Finite ordered structures fibred over a complete base poset.
//!
//! The crate works with four layers of data, each built on the one below:
//!
//! * [`finord`] — finite preorders, monotone maps, and complete posets,
//!   together with their (co)limits, exponentials, and the three
//!   quotient-map conditions (regular epi, stable regular epi, chain
//!   lifting) that drive everything above.
//! * [`laxcomma`] — objects `(Y, a)` where `a : Y -> X` is a monotone map
//!   into a fixed complete poset `X`, with morphisms required only to
//!   satisfy `a <= b . f` pointwise.  Limits, colimits, copowers, powers,
//!   and exponentials are all computed concretely.
//! * [`descent`] — decision procedures classifying a morphism as an
//!   effective quotient, definitely not one, or inside the open gap
//!   between the known necessary and sufficient conditions.
//! * [`presheaf`] — the embedding of the lax slice into poset-indexed
//!   presheaves, where descent questions become levelwise and where
//!   obstruction certificates can be searched for exhaustively.
//!
//! The [`oracle`] module cross-checks every closed-form construction
//! against brute-force universal-property verification, and hosts the
//! seeded random generators and the gap hunter.
//!
//! Everything is deterministic: element names are kept sorted, all
//! enumerations run in lexicographic order, and randomized searches take
//! explicit seeds.

pub mod descent;
pub mod finord;
pub mod fixtures;
pub mod laxcomma;
pub mod oracle;
pub mod presheaf;

mod error;

pub use error::{Error, Result};
pub use finord::map::MonotoneMap;
pub use finord::poset::BasePoset;
pub use finord::preorder::FinPreorder;
pub use laxcomma::object::{LaxMorphism, LaxObject};
