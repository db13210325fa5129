//! Concrete models of the categories A₁, A₂ and C together with their
//! validators. Validators return every failed condition instead of stopping
//! at the first one.

mod a1;
mod a2;
mod c;
pub mod examples;
mod violation;

pub use a1::A1Object;
pub use a2::{A2DirectSum, A2Morphism, A2Object};
pub use c::{CDirectSum, CMorphism, CObject};
pub use violation::{
    ensure_valid, CategoryError, DirectSumFailure, Distinguished, Side, Square, Violation,
};
