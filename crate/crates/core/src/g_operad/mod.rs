//! Finite `G`-operads: collections with group actions, operads with
//! composition tables, their algebras, change of groups, endomorphism operads
//! and the composition product of collections.

mod algebra;
mod change;
mod collection;
mod compose;
mod endo;
pub mod examples;
mod operad;
mod spec;

pub use algebra::{check_algebra, check_algebra_with, count_algebras, count_endo_maps, describe, AlgebraStructure};
pub use change::change_groups;
pub use collection::{unit_collection, FiniteGCollection, Op};
pub use compose::{check_unit_laws, compose_collections, Composite, Tuple};
pub use endo::{endo_op, endo_table, endomorphism_operad, tuple_at, tuple_index, MAX_ENDO_ENTRIES};
pub use operad::{check_operad, FiniteGOperad};
pub use spec::{ComposeSpec, OperadSpec};
