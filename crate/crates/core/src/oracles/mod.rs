//! Brute-force ground truth. Every function here counts by listing the
//! objects it counts; none of them uses a recurrence or closed form. Each
//! has a hard size cap and returns [`crate::Error::CapExceeded`] past it.

mod counting;
mod poset;

pub use counting::{
    bell, complete_hom, count_perms_by_cycles, count_set_partitions, elem_sym, COMPLETE_HOM_MAX_K, COMPLETE_HOM_MAX_N,
    ELEM_SYM_MAX_N, PARTITIONS_MAX_N, PERMS_MAX_N,
};
pub use poset::{
    fence_chain_sum, fence_poset, random_poset, Poset, OMEGA_BUDGET, ORDER_POLY_MAX_ELEMENTS, POSET_MAX_ELEMENTS,
};

/// Seed used for the random posets in the reciprocity checks.
pub const RECIPROCITY_SEED: u64 = 0x5EED_2024;
