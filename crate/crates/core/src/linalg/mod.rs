//! Exact scalars and sparse linear algebra over ℚ.

mod golden;
mod rational;
mod sparse;

pub use golden::{golden_sign, GoldenInt};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{
    kernel_basis, rank, rref, solve_upper_triangular, EchelonBasis, SparseMatrix, SparseVec,
};
