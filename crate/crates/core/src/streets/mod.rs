//! Paths in the subset lattice, streets, and the street algebra.

mod algebra;
mod path;
mod system;

pub use algebra::StreetAlgebra;
pub use path::{delta, paths_from, PathKey, SubsetPath};
pub use system::{Street, StreetSystem};
