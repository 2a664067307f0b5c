//! Finite Coxeter groups as permutation groups on their root systems.

mod classes;
mod cosets;
mod datum;
mod subset;
mod types;

pub use classes::{class_order, components, parabolic_name, ClassTable, SubsetClass, TransportStep, TransportTable};
pub use cosets::{Gate, DEFAULT_GATE};
pub use datum::{CoxeterDatum, GroupElement, RootCoordinates};
pub use subset::Subset;
pub use types::{CoxeterType, Family};
