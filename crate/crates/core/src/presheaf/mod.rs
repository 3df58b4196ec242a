//! Presheaves of graphs, relations, and ordered sets on the base poset,
//! the embedding of slice objects as presheaves, and the pointwise
//! reformulation of the descent conditions.

mod data;
mod descent;
mod obstruction;
mod pi;
mod pullback;

pub use data::{presheaf_iso, FinPresheaf, Level, NatTrans, ValueKind};
pub use descent::{descent_check_presheaf, presheaf_descent_failure, LevelWitness};
pub use obstruction::{obstruction_search, ObstructionCertificate};
pub use pi::{pi_morphism, pi_object, representable_as_pi, ReprFailure};
pub use pullback::pullback_presheaf;
