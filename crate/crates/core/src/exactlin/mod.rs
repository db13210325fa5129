//! Exact linear algebra over the rationals: matrices, linear maps and
//! subspaces held in canonical form.

mod error;
mod linear_map;
mod matrix;
mod rational;
mod subspace;

pub use error::LinalgError;
pub use linear_map::LinearMap;
pub use matrix::Matrix;
pub use rational::{ParseRationalError, Rational};
pub use subspace::Subspace;
