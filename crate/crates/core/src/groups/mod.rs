//! Small finite groups as explicit multiplication tables.
//!
//! Tables are capped at [`MAX_ORDER`] elements and every structural query
//! is an exhaustive search, which is exact at that scale.

mod catalog;
mod iso;
mod structure;
mod subgroup;
mod table;

pub use catalog::{
    abelian, abelian_groups_of_order, build_burnside, build_standard, cyclic, metacyclic, s3, u33,
    z9_semi_z3, BurnsideGroup, BurnsideParams, StandardGroup,
};
pub use iso::{contains_copy, find_embedding, is_isomorphic, small_generating_set, Pattern};
pub use structure::{
    all_sylow_cyclic, classify_order_27, davis_decomposition, maximal_cyclic_normal_of_order,
    min_cyclic_index, normal_p_complement, normal_rank, p2_condition, summarize, sylow,
    two_p_condition, DavisDecomposition, DavisSummary, GroupSummary, Order27,
};
pub use subgroup::Subgroup;
pub use table::GroupTable;

/// Largest group order accepted by [`GroupTable`].
pub const MAX_ORDER: usize = 512;
