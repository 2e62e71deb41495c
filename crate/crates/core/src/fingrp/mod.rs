//! Finite groups held as explicit element lists, with conjugacy classes,
//! centralizers and exact character tables.

mod chartable;
mod classes;
mod group;

pub use chartable::{character_table, tensor, CharTable, CharTableRepr, TabulatedGroup};
pub use classes::{centralizer, conjugacy_classes, ConjClassSet};
pub use group::{close_group, close_group_with_identity, FinGroup, GroupElement, Perm, DEFAULT_BOUND};

/// Group-size bound taken from `EXQ_BOUND`, else [`DEFAULT_BOUND`].
pub fn configured_bound() -> usize {
    std::env::var("EXQ_BOUND").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_BOUND)
}
