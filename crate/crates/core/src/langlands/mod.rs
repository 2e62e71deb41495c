//! Springer parameters, Jacobson-Morozov cocharacters, L-parameters and the
//! maps relating second-kind points to them.

mod params;
mod partition;
mod springer;

pub use params::{build_phi, eval_phi, CellLabel, Cocharacter, LParameter, PrincipalSeries, ReederParameter};
pub use partition::{dominance_leq, murnaghan_nakayama, partitions, springer_a, Partition};
pub use springer::{component_pairs, B2Orbit, CharKind, ComponentCharacters, ComponentSpringer, G2Orbit, LocalSystem, OrbitLabel, SpringerData, SpringerPair};
