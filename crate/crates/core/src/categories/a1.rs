use super::violation::Violation;
use crate::exactlin::LinearMap;

/// A pair of spaces `k^m`, `k^n` with `u: k^n -> k^m` and `v: k^m -> k^n`
/// such that `1 - u∘v` is invertible. Only objects are modelled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct A1Object {
    m: usize,
    n: usize,
    u: LinearMap,
    v: LinearMap,
}

impl A1Object {
    pub fn new(m: usize, n: usize, u: LinearMap, v: LinearMap) -> Self {
        A1Object { m, n, u, v }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> &LinearMap {
        &self.u
    }

    pub fn v(&self) -> &LinearMap {
        &self.v
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.u.matrix().shape() != (self.m, self.n) {
            let (r, c) = self.u.matrix().shape();
            out.push(Violation::Shape(format!(
                "u is {r}x{c}, expected {}x{}",
                self.m, self.n
            )));
        }
        if self.v.matrix().shape() != (self.n, self.m) {
            let (r, c) = self.v.matrix().shape();
            out.push(Violation::Shape(format!(
                "v is {r}x{c}, expected {}x{}",
                self.n, self.m
            )));
        }
        if !out.is_empty() {
            return out;
        }
        if !self.one_minus_uv().is_invertible() {
            out.push(Violation::A1Singular);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `1_m - u∘v`; panics on inconsistent shapes.
    pub fn one_minus_uv(&self) -> LinearMap {
        let uv = self.u.compose(&self.v).expect("shape");
        LinearMap::identity(self.m).sub(&uv).expect("shape")
    }

    /// `1_n - v∘u`; panics on inconsistent shapes.
    pub fn one_minus_vu(&self) -> LinearMap {
        let vu = self.v.compose(&self.u).expect("shape");
        LinearMap::identity(self.n).sub(&vu).expect("shape")
    }
}
