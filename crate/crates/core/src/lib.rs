//! Quiver presentations of descent algebras of finite Coxeter groups, in
//! exact arithmetic.

pub mod coxeter;
pub mod descent;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod presentation;
pub mod render;
pub mod streets;

pub use error::{Error, Result};
