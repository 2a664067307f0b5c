//! The descent algebra `Σ(W)` in its `x`, `y` and `e` bases.

mod algebra;
mod group_algebra;
mod vector;

pub use algebra::{DescentAlgebra, LemmaReport, MMatrix, StructureConstants};
pub use group_algebra::GroupAlgebraElement;
pub use vector::{compare_subsets, subset_order, Basis, DescentVector};
