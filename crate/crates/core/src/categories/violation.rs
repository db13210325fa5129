use std::fmt;

use thiserror::Error;

use crate::exactlin::LinalgError;

/// The two sides `-`/`+` of an A₂ object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Side::Minus => "minus",
            Side::Plus => "plus",
        }
    }
}

/// The four distinguished subspaces of a C object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distinguished {
    A1,
    A2,
    B1,
    B2,
}

impl Distinguished {
    pub const ALL: [Distinguished; 4] = [
        Distinguished::A1,
        Distinguished::A2,
        Distinguished::B1,
        Distinguished::B2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Distinguished::A1 => "a1",
            Distinguished::A2 => "a2",
            Distinguished::B1 => "b1",
            Distinguished::B2 => "b2",
        }
    }
}

/// One of the four squares an A₂ morphism has to make commute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Square {
    /// `eta_s ∘ e_s = e_zero ∘ delta_s`
    Delta(Side),
    /// `xi_s ∘ e_zero = e_s ∘ gamma_s`
    Gamma(Side),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DirectSumFailure {
    /// The two subspaces meet in a subspace of this dimension.
    IntersectionNonzero { dim: usize },
    /// Trivial intersection, but the dimensions add up to less than the ambient.
    DimensionsShort { sum: usize, ambient: usize },
}

/// A single failed condition reported by a validator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    Shape(String),
    /// `A_i ⊕ B_j = V` fails for the pair `(i, j)`.
    DirectSum {
        pair: (u8, u8),
        failure: DirectSumFailure,
    },
    /// The map does not send the given source subspace into the matching
    /// target subspace.
    Containment(Distinguished),
    /// `gamma_s ∘ delta_s` is not the identity.
    SectionNotIdentity(Side),
    /// `gamma_s ∘ delta_{-s}` is not invertible.
    CrossNotInvertible {
        gamma: Side,
    },
    SquareFails(Square),
    /// `1 - u∘v` is singular.
    A1Singular,
    InSource(Box<Violation>),
    InTarget(Box<Violation>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(msg) => write!(f, "shape: {msg}"),
            Violation::DirectSum { pair, failure } => {
                let (i, j) = pair;
                match failure {
                    DirectSumFailure::IntersectionNonzero { dim } => write!(
                        f,
                        "direct-sum ({i},{j}): a{i} and b{j} intersect in dimension {dim}"
                    ),
                    DirectSumFailure::DimensionsShort { sum, ambient } => write!(
                        f,
                        "direct-sum ({i},{j}): dim a{i} + dim b{j} = {sum} < {ambient}"
                    ),
                }
            }
            Violation::Containment(d) => {
                let n = d.name();
                write!(f, "containment: map({n}) is not contained in target {n}")
            }
            Violation::SectionNotIdentity(s) => {
                let n = s.name();
                write!(f, "section: gamma_{n} * delta_{n} is not the identity")
            }
            Violation::CrossNotInvertible { gamma } => write!(
                f,
                "cross: gamma_{} * delta_{} is not invertible",
                gamma.name(),
                gamma.other().name()
            ),
            Violation::SquareFails(Square::Delta(s)) => {
                let n = s.name();
                write!(f, "square: eta_{n} * e_{n} != e_zero * delta_{n}")
            }
            Violation::SquareFails(Square::Gamma(s)) => {
                let n = s.name();
                write!(f, "square: xi_{n} * e_zero != e_{n} * gamma_{n}")
            }
            Violation::A1Singular => write!(f, "a1: 1 - u * v is singular"),
            Violation::InSource(v) => write!(f, "source: {v}"),
            Violation::InTarget(v) => write!(f, "target: {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("morphisms are not composable: middle objects differ")]
    ObjectMismatch,
    #[error("invalid input:\n{}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| format!("  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Turns a violation list into `Ok(())` or [`CategoryError::Invalid`].
pub fn ensure_valid(violations: Vec<Violation>) -> Result<(), CategoryError> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CategoryError::Invalid(violations))
    }
}
