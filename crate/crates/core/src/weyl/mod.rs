//! Root data, Weyl groups acting on the dual torus, the group `W^s` cut out
//! by a ramified character, and stabilizers of torus points.
//!
//! Weyl elements are stored by their matrices on the cocharacter lattice, so
//! they act on torus coordinates through [`crate::torus::act`].

mod datum;
mod inertial;
mod levi;

pub use datum::{weyl_group, CartanType, Component, RootDatum, Subsystem};
pub(crate) use datum::solve_combination;
pub use inertial::{compute_ws, vanishing_roots, InertialDatum, WsMode, WsResult};
pub use levi::{levi_decompose, stabilizer_of_point, DecompositionSummary, StabilizerDecomposition};
