//! Small hand-checkable objects used throughout the tests and docs.

use super::{A2Object, CObject};
use crate::exactlin::{LinearMap, Matrix, Rational, Subspace};

/// `V = Q^2`, `A = (span(1,0), span(1,1))`, `B = (span(0,1), span(1,-1))`.
pub fn q2_object() -> CObject {
    let span = |x: i64, y: i64| Subspace::span(&Matrix::from_ints(2, 1, &[x, y]));
    CObject::new(2, span(1, 0), span(1, 1), span(0, 1), span(1, -1))
}

/// The A₂ object with `δ₋ = (1,0)ᵀ`, `γ₋ = (1 0)`, `δ₊ = (1,1)ᵀ`,
/// `γ₊ = (1/2 1/2)`.
pub fn q2_a2_object() -> A2Object {
    let half = Rational::new(1, 2);
    A2Object::new(
        LinearMap::new(Matrix::from_ints(2, 1, &[1, 0])),
        LinearMap::new(Matrix::from_ints(1, 2, &[1, 0])),
        LinearMap::new(Matrix::from_ints(2, 1, &[1, 1])),
        LinearMap::new(Matrix::from_rows(2, vec![vec![half.clone(), half]]).unwrap()),
    )
}

/// All three spaces one-dimensional and every structure map `[1]`.
pub fn unit_a2_object() -> A2Object {
    let one = LinearMap::identity(1);
    A2Object::new(one.clone(), one.clone(), one.clone(), one)
}
