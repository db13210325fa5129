//! The category A₂ of triples `E_- ⇄ E_0 ⇄ E_+`.

use super::violation::{ensure_valid, CategoryError, Side, Square, Violation};
use crate::exactlin::{LinearMap, Matrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct A2Object {
    n_minus: usize,
    n_zero: usize,
    n_plus: usize,
    delta_minus: LinearMap,
    gamma_minus: LinearMap,
    delta_plus: LinearMap,
    gamma_plus: LinearMap,
}

impl A2Object {
    /// Dimensions are read off `delta_minus` and `delta_plus`.
    pub fn new(
        delta_minus: LinearMap,
        gamma_minus: LinearMap,
        delta_plus: LinearMap,
        gamma_plus: LinearMap,
    ) -> Self {
        A2Object {
            n_minus: delta_minus.domain_dim(),
            n_zero: delta_minus.codomain_dim(),
            n_plus: delta_plus.domain_dim(),
            delta_minus,
            gamma_minus,
            delta_plus,
            gamma_plus,
        }
    }

    /// Assembles an object with explicitly declared dimensions; mismatches
    /// surface as shape violations.
    pub fn with_dims(
        dims: [usize; 3],
        delta_minus: LinearMap,
        gamma_minus: LinearMap,
        delta_plus: LinearMap,
        gamma_plus: LinearMap,
    ) -> Self {
        let [n_minus, n_zero, n_plus] = dims;
        A2Object {
            n_minus,
            n_zero,
            n_plus,
            delta_minus,
            gamma_minus,
            delta_plus,
            gamma_plus,
        }
    }

    pub fn zero() -> Self {
        A2Object::new(
            LinearMap::zero(0, 0),
            LinearMap::zero(0, 0),
            LinearMap::zero(0, 0),
            LinearMap::zero(0, 0),
        )
    }

    /// `[n_minus, n_zero, n_plus]`
    pub fn dims(&self) -> [usize; 3] {
        [self.n_minus, self.n_zero, self.n_plus]
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn n_zero(&self) -> usize {
        self.n_zero
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n(&self, side: Side) -> usize {
        match side {
            Side::Minus => self.n_minus,
            Side::Plus => self.n_plus,
        }
    }

    pub fn delta_minus(&self) -> &LinearMap {
        &self.delta_minus
    }

    pub fn gamma_minus(&self) -> &LinearMap {
        &self.gamma_minus
    }

    pub fn delta_plus(&self) -> &LinearMap {
        &self.delta_plus
    }

    pub fn gamma_plus(&self) -> &LinearMap {
        &self.gamma_plus
    }

    pub fn delta(&self, side: Side) -> &LinearMap {
        match side {
            Side::Minus => &self.delta_minus,
            Side::Plus => &self.delta_plus,
        }
    }

    pub fn gamma(&self, side: Side) -> &LinearMap {
        match side {
            Side::Minus => &self.gamma_minus,
            Side::Plus => &self.gamma_plus,
        }
    }

    fn shape_violations(&self) -> Vec<Violation> {
        let checks = [
            (
                "delta_minus",
                &self.delta_minus,
                (self.n_zero, self.n_minus),
            ),
            (
                "gamma_minus",
                &self.gamma_minus,
                (self.n_minus, self.n_zero),
            ),
            ("delta_plus", &self.delta_plus, (self.n_zero, self.n_plus)),
            ("gamma_plus", &self.gamma_plus, (self.n_plus, self.n_zero)),
        ];
        checks
            .into_iter()
            .filter_map(|(name, map, expected)| {
                let found = map.matrix().shape();
                (found != expected).then(|| {
                    Violation::Shape(format!(
                        "{name} is {}x{}, expected {}x{}",
                        found.0, found.1, expected.0, expected.1
                    ))
                })
            })
            .collect()
    }

    /// Shape problems, else the failed conditions among
    /// `γ₋δ₋ = 1`, `γ₊δ₊ = 1`, `γ₋δ₊` invertible, `γ₊δ₋` invertible.
    pub fn validate(&self) -> Vec<Violation> {
        let shape = self.shape_violations();
        if !shape.is_empty() {
            return shape;
        }
        let mut out = Vec::new();
        for side in [Side::Minus, Side::Plus] {
            let section = self
                .gamma(side)
                .compose(self.delta(side))
                .expect("shapes checked");
            if !section.is_identity() {
                out.push(Violation::SectionNotIdentity(side));
            }
        }
        for gamma in [Side::Minus, Side::Plus] {
            let cross = self
                .gamma(gamma)
                .compose(self.delta(gamma.other()))
                .expect("shapes checked");
            if !cross.is_invertible() {
                out.push(Violation::CrossNotInvertible { gamma });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn direct_sum(&self, other: &A2Object) -> A2DirectSum {
        let sum = A2Object::new(
            self.delta_minus.direct_sum(&other.delta_minus),
            self.gamma_minus.direct_sum(&other.gamma_minus),
            self.delta_plus.direct_sum(&other.delta_plus),
            self.gamma_plus.direct_sum(&other.gamma_plus),
        );
        let inject = |left: bool| -> [LinearMap; 3] {
            let mut out = self.dims().map(|_| LinearMap::identity(0));
            for (k, slot) in out.iter_mut().enumerate() {
                let (n, m) = (self.dims()[k], other.dims()[k]);
                let matrix = if left {
                    Matrix::identity(n).vcat(&Matrix::zeros(m, n)).unwrap()
                } else {
                    Matrix::zeros(n, m).vcat(&Matrix::identity(m)).unwrap()
                };
                *slot = LinearMap::new(matrix);
            }
            out
        };
        let transpose = |maps: &[LinearMap; 3]| -> [LinearMap; 3] {
            maps.clone().map(|f| LinearMap::new(f.matrix().transpose()))
        };
        let (l, r) = (inject(true), inject(false));
        A2DirectSum {
            inclusions: [
                A2Morphism::from_components(self.clone(), sum.clone(), l.clone()),
                A2Morphism::from_components(other.clone(), sum.clone(), r.clone()),
            ],
            projections: [
                A2Morphism::from_components(sum.clone(), self.clone(), transpose(&l)),
                A2Morphism::from_components(sum.clone(), other.clone(), transpose(&r)),
            ],
            sum,
        }
    }
}

#[derive(Clone, Debug)]
pub struct A2DirectSum {
    pub sum: A2Object,
    pub inclusions: [A2Morphism; 2],
    pub projections: [A2Morphism; 2],
}

/// A triple `(e_-, e_0, e_+)` commuting with the structure maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct A2Morphism {
    source: A2Object,
    target: A2Object,
    e_minus: LinearMap,
    e_zero: LinearMap,
    e_plus: LinearMap,
}

impl A2Morphism {
    pub fn new(
        source: A2Object,
        target: A2Object,
        e_minus: LinearMap,
        e_zero: LinearMap,
        e_plus: LinearMap,
    ) -> Self {
        A2Morphism {
            source,
            target,
            e_minus,
            e_zero,
            e_plus,
        }
    }

    fn from_components(source: A2Object, target: A2Object, [m, z, p]: [LinearMap; 3]) -> Self {
        A2Morphism::new(source, target, m, z, p)
    }

    pub fn identity(object: &A2Object) -> Self {
        let [m, z, p] = object.dims();
        A2Morphism::new(
            object.clone(),
            object.clone(),
            LinearMap::identity(m),
            LinearMap::identity(z),
            LinearMap::identity(p),
        )
    }

    pub fn zero(source: &A2Object, target: &A2Object) -> Self {
        let (s, t) = (source.dims(), target.dims());
        A2Morphism::new(
            source.clone(),
            target.clone(),
            LinearMap::zero(t[0], s[0]),
            LinearMap::zero(t[1], s[1]),
            LinearMap::zero(t[2], s[2]),
        )
    }

    pub fn source(&self) -> &A2Object {
        &self.source
    }

    pub fn target(&self) -> &A2Object {
        &self.target
    }

    pub fn e_minus(&self) -> &LinearMap {
        &self.e_minus
    }

    pub fn e_zero(&self) -> &LinearMap {
        &self.e_zero
    }

    pub fn e_plus(&self) -> &LinearMap {
        &self.e_plus
    }

    pub fn e(&self, side: Side) -> &LinearMap {
        match side {
            Side::Minus => &self.e_minus,
            Side::Plus => &self.e_plus,
        }
    }

    /// `[e_minus, e_zero, e_plus]`
    pub fn components(&self) -> [&LinearMap; 3] {
        [&self.e_minus, &self.e_zero, &self.e_plus]
    }

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
        let names = ["e_minus", "e_zero", "e_plus"];
        let (s, t) = (self.source.dims(), self.target.dims());
        for k in 0..3 {
            let found = self.components()[k].matrix().shape();
            if found != (t[k], s[k]) {
                out.push(Violation::Shape(format!(
                    "{} is {}x{}, expected {}x{}",
                    names[k], found.0, found.1, t[k], s[k]
                )));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for side in [Side::Minus, Side::Plus] {
            let e = self.e(side);
            let lhs = self.target.delta(side).compose(e).expect("shapes checked");
            let rhs = self
                .e_zero
                .compose(self.source.delta(side))
                .expect("shapes checked");
            if lhs != rhs {
                out.push(Violation::SquareFails(Square::Delta(side)));
            }
            let lhs = self
                .target
                .gamma(side)
                .compose(&self.e_zero)
                .expect("shapes checked");
            let rhs = e.compose(self.source.gamma(side)).expect("shapes checked");
            if lhs != rhs {
                out.push(Violation::SquareFails(Square::Gamma(side)));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self ∘ inner`, componentwise.
    pub fn compose(&self, inner: &A2Morphism) -> Result<A2Morphism, CategoryError> {
        if inner.target != self.source {
            return Err(CategoryError::ObjectMismatch);
        }
        let out = A2Morphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.e_minus.compose(&inner.e_minus)?,
            self.e_zero.compose(&inner.e_zero)?,
            self.e_plus.compose(&inner.e_plus)?,
        );
        debug_assert!(!(self.is_valid() && inner.is_valid()) || out.is_valid());
        Ok(out)
    }

    pub fn try_new(
        source: A2Object,
        target: A2Object,
        e_minus: LinearMap,
        e_zero: LinearMap,
        e_plus: LinearMap,
    ) -> Result<Self, CategoryError> {
        let out = A2Morphism::new(source, target, e_minus, e_zero, e_plus);
        ensure_valid(out.validate())?;
        Ok(out)
    }
}
