//! The category C: a space with two pairs of distinguished subspaces such
//! that every `A_i` is complementary to every `B_j`.

use super::violation::{ensure_valid, CategoryError, DirectSumFailure, Distinguished, Violation};
use crate::exactlin::{LinearMap, Matrix, Subspace};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CObject {
    ambient_dim: usize,
    a: [Subspace; 2],
    b: [Subspace; 2],
}

impl CObject {
    /// Assembles an object without checking it; see [`CObject::validate`].
    pub fn new(ambient_dim: usize, a1: Subspace, a2: Subspace, b1: Subspace, b2: Subspace) -> Self {
        CObject {
            ambient_dim,
            a: [a1, a2],
            b: [b1, b2],
        }
    }

    pub fn zero() -> Self {
        CObject::new(
            0,
            Subspace::zero(0),
            Subspace::zero(0),
            Subspace::zero(0),
            Subspace::zero(0),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn a1(&self) -> &Subspace {
        &self.a[0]
    }

    pub fn a2(&self) -> &Subspace {
        &self.a[1]
    }

    pub fn b1(&self) -> &Subspace {
        &self.b[0]
    }

    pub fn b2(&self) -> &Subspace {
        &self.b[1]
    }

    pub fn subspace(&self, which: Distinguished) -> &Subspace {
        match which {
            Distinguished::A1 => &self.a[0],
            Distinguished::A2 => &self.a[1],
            Distinguished::B1 => &self.b[0],
            Distinguished::B2 => &self.b[1],
        }
    }

    /// Every failed condition, in the order shape, then pairs
    /// (1,1), (1,2), (2,1), (2,2).
    pub fn validate(&self) -> Vec<Violation> {
        let shape: Vec<Violation> = Distinguished::ALL
            .iter()
            .filter_map(|&d| {
                let found = self.subspace(d).ambient_dim();
                (found != self.ambient_dim).then(|| {
                    Violation::Shape(format!(
                        "{} has ambient dimension {found}, expected {}",
                        d.name(),
                        self.ambient_dim
                    ))
                })
            })
            .collect();
        if !shape.is_empty() {
            return shape;
        }
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (&self.a[i], &self.b[j]);
                let meet = a
                    .intersection(b)
                    .expect("ambient dimensions checked above")
                    .dim();
                let failure = if meet > 0 {
                    Some(DirectSumFailure::IntersectionNonzero { dim: meet })
                } else if a.dim() + b.dim() < self.ambient_dim {
                    Some(DirectSumFailure::DimensionsShort {
                        sum: a.dim() + b.dim(),
                        ambient: self.ambient_dim,
                    })
                } else {
                    None
                };
                if let Some(failure) = failure {
                    out.push(Violation::DirectSum {
                        pair: (i as u8 + 1, j as u8 + 1),
                        failure,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self ⊕ other` with its canonical inclusions and projections.
    pub fn direct_sum(&self, other: &CObject) -> CDirectSum {
        let sum = CObject {
            ambient_dim: self.ambient_dim + other.ambient_dim,
            a: [
                self.a[0].direct_sum(&other.a[0]),
                self.a[1].direct_sum(&other.a[1]),
            ],
            b: [
                self.b[0].direct_sum(&other.b[0]),
                self.b[1].direct_sum(&other.b[1]),
            ],
        };
        let (n, m) = (self.ambient_dim, other.ambient_dim);
        let left = Matrix::identity(n).vcat(&Matrix::zeros(m, n)).unwrap();
        let right = Matrix::zeros(n, m).vcat(&Matrix::identity(m)).unwrap();
        CDirectSum {
            inclusions: [
                CMorphism::new(self.clone(), sum.clone(), LinearMap::new(left.clone())),
                CMorphism::new(other.clone(), sum.clone(), LinearMap::new(right.clone())),
            ],
            projections: [
                CMorphism::new(sum.clone(), self.clone(), LinearMap::new(left.transpose())),
                CMorphism::new(
                    sum.clone(),
                    other.clone(),
                    LinearMap::new(right.transpose()),
                ),
            ],
            sum,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CDirectSum {
    pub sum: CObject,
    pub inclusions: [CMorphism; 2],
    pub projections: [CMorphism; 2],
}

/// A structure-preserving linear map between C objects.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CMorphism {
    source: CObject,
    target: CObject,
    map: LinearMap,
}

impl CMorphism {
    pub fn new(source: CObject, target: CObject, map: LinearMap) -> Self {
        CMorphism {
            source,
            target,
            map,
        }
    }

    pub fn identity(object: &CObject) -> Self {
        let n = object.ambient_dim();
        CMorphism::new(object.clone(), object.clone(), LinearMap::identity(n))
    }

    pub fn zero(source: &CObject, target: &CObject) -> Self {
        let map = LinearMap::zero(target.ambient_dim(), source.ambient_dim());
        CMorphism::new(source.clone(), target.clone(), map)
    }

    pub fn source(&self) -> &CObject {
        &self.source
    }

    pub fn target(&self) -> &CObject {
        &self.target
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// Violations of the endpoints, then of the map shape, then one per
    /// distinguished subspace that is not carried into its counterpart.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out: Vec<Violation> = self
            .source
            .validate()
            .into_iter()
            .map(|v| Violation::InSource(Box::new(v)))
            .chain(
                self.target
                    .validate()
                    .into_iter()
                    .map(|v| Violation::InTarget(Box::new(v))),
            )
            .collect();
        let expected = (self.target.ambient_dim(), self.source.ambient_dim());
        let found = self.map.matrix().shape();
        if found != expected {
            out.push(Violation::Shape(format!(
                "map is {}x{}, expected {}x{}",
                found.0, found.1, expected.0, expected.1
            )));
            return out;
        }
        if !out.is_empty() {
            return out;
        }
        for d in Distinguished::ALL {
            let image = self
                .map
                .restrict(self.source.subspace(d))
                .expect("shape checked above");
            let inside = self
                .target
                .subspace(d)
                .contains_image(&image)
                .expect("shape checked above");
            if !inside {
                out.push(Violation::Containment(d));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &CMorphism) -> Result<CMorphism, CategoryError> {
        if inner.target != self.source {
            return Err(CategoryError::ObjectMismatch);
        }
        let map = self.map.compose(&inner.map)?;
        let out = CMorphism::new(inner.source.clone(), self.target.clone(), map);
        debug_assert!(!(self.is_valid() && inner.is_valid()) || out.is_valid());
        Ok(out)
    }

    /// Checked constructor.
    pub fn try_new(
        source: CObject,
        target: CObject,
        map: LinearMap,
    ) -> Result<Self, CategoryError> {
        let out = CMorphism::new(source, target, map);
        ensure_valid(out.validate())?;
        Ok(out)
    }
}
