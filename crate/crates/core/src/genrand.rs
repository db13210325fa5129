//! Deterministic generation of valid objects and morphisms.
//!
//! All randomness comes from SplitMix64 (state increment
//! `0x9e3779b97f4a7c15`, finalizer multipliers `0xbf58476d1ce4e5b9` and
//! `0x94d049bb133111eb`). Sample `i` of a run seeded with `s` uses a fresh
//! SplitMix64 stream whose seed is the `i`-th output of the stream seeded
//! with `s`, so samples can be drawn independently and in any order.
//!
//! Morphisms are built from structurally valid pieces rather than by solving
//! containment constraints. The fixed mix for [`Generator::random_c_morphism`]
//! and [`Generator::random_a2_morphism`] (weights out of 10) is:
//!
//! | kind                                         | C | A₂ |
//! |----------------------------------------------|---|----|
//! | scalar multiple of the identity              | 2 | 2  |
//! | direct-sum inclusion `x -> x⊕y` / `y⊕x`       | 2 | 1  |
//! | direct-sum projection `x⊕y -> x` / `y`        | 2 | 1  |
//! | block scalar `K⊗1` on `x⊕x`                   | 2 | 1  |
//! | S-image of a C morphism, conjugated           | - | 3  |
//! | one of the above followed by a map out of its target | 2 | 2 |
//!
//! Maps out of a given object ([`Generator::random_c_morphism_from`]) are a
//! scalar, an inclusion into a direct sum, or a column `K⊗1: x -> x⊕x`, each
//! with weight 1. Summands are drawn with half the configured ambient
//! dimension so that direct sums stay within the configured bound.

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::categories::{A1Object, A2Morphism, A2Object, CMorphism, CObject, CategoryError};
use crate::exactlin::{LinalgError, LinearMap, Matrix, Rational, Subspace};
use crate::functors::{s_on_morphism, s_on_object};

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_ambient_dim: usize,
    /// Random entries are drawn uniformly from `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Attempts before [`GenError::RetryLimitExceeded`].
    pub retry_limit: usize,
}

impl GenConfig {
    pub fn new(seed: u64) -> Self {
        GenConfig {
            seed,
            ..GenConfig::default()
        }
    }

    pub fn with_max_ambient_dim(mut self, max_ambient_dim: usize) -> Self {
        self.max_ambient_dim = max_ambient_dim;
        self
    }

    pub fn check(&self) -> Result<(), GenError> {
        if self.retry_limit == 0 {
            return Err(GenError::InvalidConfig(
                "retry_limit must be at least 1".into(),
            ));
        }
        if self.entry_bound < 1 {
            return Err(GenError::InvalidConfig(
                "entry_bound must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_ambient_dim: 6,
            entry_bound: 3,
            retry_limit: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no valid sample after {attempts} attempts; try another seed")]
    RetryLimitExceeded { attempts: usize },
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A seeded generator. Identical configurations produce identical output.
#[derive(Debug, Clone)]
pub struct Generator {
    cfg: GenConfig,
    rng: SplitMix64,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Result<Self, GenError> {
        cfg.check()?;
        let rng = SplitMix64::seed_from_u64(cfg.seed);
        Ok(Generator { cfg, rng })
    }

    /// Generator for sample `index` of a run seeded with `cfg.seed`.
    pub fn for_sample(cfg: &GenConfig, index: u64) -> Result<Self, GenError> {
        let mut base =
            SplitMix64::seed_from_u64(cfg.seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)));
        let seed = base.random::<u64>();
        Generator::new(GenConfig {
            seed,
            ..cfg.clone()
        })
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    fn entry(&mut self) -> Rational {
        let b = self.cfg.entry_bound;
        Rational::from(self.rng.random_range(-b..=b))
    }

    fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn random_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let entries = (0..rows * cols).map(|_| self.entry()).collect();
        Matrix::new(rows, cols, entries).expect("entry count")
    }

    pub fn random_map(&mut self, codomain_dim: usize, domain_dim: usize) -> LinearMap {
        LinearMap::new(self.random_matrix(codomain_dim, domain_dim))
    }

    /// Product of a random unit lower triangular and a random unit upper
    /// triangular matrix: invertible by construction with determinant 1.
    pub fn random_invertible(&mut self, n: usize) -> LinearMap {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                lower.set(i, j, self.entry());
            }
            for j in i + 1..n {
                upper.set(i, j, self.entry());
            }
        }
        LinearMap::new(lower.mul(&upper).expect("square"))
    }

    /// A valid C object with ambient dimension and `dim A₁` drawn uniformly
    /// (`0 <= dim A₁ <= ambient <= max_ambient_dim`).
    pub fn random_c_object(&mut self) -> Result<CObject, GenError> {
        let n = self.below(self.cfg.max_ambient_dim + 1);
        let k = self.below(n + 1);
        self.random_c_object_with_dims(n, k)
    }

    /// A valid C object on `k^n` with `dim A₁ = k`. `A₁`, `B₁` come from the
    /// columns of a random invertible matrix, `A₂` and `B₂` are graphs of
    /// random maps `A₁ -> B₁` and `B₁ -> A₁`; the pair is redrawn until
    /// `A₂ ⊕ B₂ = V`.
    pub fn random_c_object_with_dims(&mut self, n: usize, k: usize) -> Result<CObject, GenError> {
        assert!(k <= n, "split exceeds ambient dimension");
        let basis = self.random_invertible(n).into_matrix();
        for _ in 0..self.cfg.retry_limit {
            let r = self.random_matrix(n - k, k);
            let s = self.random_matrix(k, n - k);
            if let Some(x) = c_object_from_graphs(&basis, k, &r, &s) {
                return Ok(x);
            }
        }
        Err(GenError::RetryLimitExceeded {
            attempts: self.cfg.retry_limit,
        })
    }

    fn halved(&self) -> Generator {
        let mut g = self.clone();
        g.cfg.max_ambient_dim = self.cfg.max_ambient_dim.div_ceil(2);
        g
    }

    fn with_halved<T>(&mut self, f: impl FnOnce(&mut Generator) -> T) -> T {
        let mut g = self.halved();
        let out = f(&mut g);
        self.rng = g.rng;
        out
    }

    /// `S` of a random C object, conjugated by random changes of basis on
    /// all three spaces.
    pub fn random_a2_object(&mut self) -> Result<A2Object, GenError> {
        let x = self.random_c_object()?;
        let e = s_on_object(&x)?;
        let q = self.random_conjugators(&e);
        Ok(conjugate_a2_object(&e, &q)?)
    }

    fn random_conjugators(&mut self, e: &A2Object) -> [LinearMap; 3] {
        e.dims().map(|n| self.random_invertible(n))
    }

    pub fn random_c_morphism(&mut self) -> Result<CMorphism, GenError> {
        let kind = self.below(10);
        let basic = |g: &mut Generator, kind: usize| -> Result<CMorphism, GenError> {
            match kind {
                0 | 1 => {
                    let x = g.random_c_object()?;
                    Ok(g.scalar_c(&x))
                }
                2 | 3 => {
                    let (x, y) = g.with_halved(|h| {
                        Ok::<_, GenError>((h.random_c_object()?, h.random_c_object()?))
                    })?;
                    let ds = x.direct_sum(&y);
                    Ok(ds.inclusions[g.below(2)].clone())
                }
                4 | 5 => {
                    let (x, y) = g.with_halved(|h| {
                        Ok::<_, GenError>((h.random_c_object()?, h.random_c_object()?))
                    })?;
                    let ds = x.direct_sum(&y);
                    Ok(ds.projections[g.below(2)].clone())
                }
                _ => {
                    let x = g.with_halved(|h| h.random_c_object())?;
                    let k = g.random_matrix(2, 2);
                    Ok(block_scalar_c(&x, 2, &k))
                }
            }
        };
        if kind < 8 {
            return basic(self, kind);
        }
        let first = self.with_halved(|h| {
            let inner = h.below(8);
            basic(h, inner)
        })?;
        let second = self.random_c_morphism_from(first.target())?;
        Ok(second.compose(&first)?)
    }

    /// A valid morphism with the given source.
    pub fn random_c_morphism_from(&mut self, x: &CObject) -> Result<CMorphism, GenError> {
        match self.below(3) {
            0 => Ok(self.scalar_c(x)),
            1 => {
                let y = self.with_halved(|h| h.random_c_object())?;
                if self.below(2) == 0 {
                    Ok(x.direct_sum(&y).inclusions[0].clone())
                } else {
                    Ok(y.direct_sum(x).inclusions[1].clone())
                }
            }
            _ => {
                let k = self.random_matrix(2, 1);
                Ok(block_scalar_c(x, 1, &k))
            }
        }
    }

    /// A pair `(f, g)` with `g ∘ f` defined.
    pub fn random_c_composable_pair(&mut self) -> Result<(CMorphism, CMorphism), GenError> {
        let f = self.random_c_morphism()?;
        let g = self.random_c_morphism_from(f.target())?;
        Ok((f, g))
    }

    fn scalar_c(&mut self, x: &CObject) -> CMorphism {
        let c = self.entry();
        CMorphism::new(x.clone(), x.clone(), LinearMap::scalar(x.ambient_dim(), c))
    }

    fn scalar_a2(&mut self, e: &A2Object) -> A2Morphism {
        let c = self.entry();
        let [m, z, p] = e.dims();
        A2Morphism::new(
            e.clone(),
            e.clone(),
            LinearMap::scalar(m, c.clone()),
            LinearMap::scalar(z, c.clone()),
            LinearMap::scalar(p, c),
        )
    }

    pub fn random_a2_morphism(&mut self) -> Result<A2Morphism, GenError> {
        let kind = self.below(10);
        let basic = |g: &mut Generator, kind: usize| -> Result<A2Morphism, GenError> {
            match kind {
                0 | 1 => {
                    let e = g.random_a2_object()?;
                    Ok(g.scalar_a2(&e))
                }
                2 | 3 => {
                    let (e, f) = g.with_halved(|h| {
                        Ok::<_, GenError>((h.random_a2_object()?, h.random_a2_object()?))
                    })?;
                    let ds = e.direct_sum(&f);
                    let side = g.below(2);
                    Ok(if kind == 2 {
                        ds.inclusions[side].clone()
                    } else {
                        ds.projections[side].clone()
                    })
                }
                4 => {
                    let e = g.with_halved(|h| h.random_a2_object())?;
                    let k = g.random_matrix(2, 2);
                    Ok(block_scalar_a2(&e, 2, &k))
                }
                _ => {
                    let f = g.random_c_morphism()?;
                    let sf = s_on_morphism(&f)?;
                    let qs = g.random_conjugators(sf.source());
                    let qt = g.random_conjugators(sf.target());
                    Ok(conjugate_a2_morphism(&sf, &qs, &qt)?)
                }
            }
        };
        if kind < 8 {
            return basic(self, kind);
        }
        let first = self.with_halved(|h| {
            let inner = h.below(8);
            basic(h, inner)
        })?;
        let second = self.random_a2_morphism_from(first.target())?;
        Ok(second.compose(&first)?)
    }

    pub fn random_a2_morphism_from(&mut self, e: &A2Object) -> Result<A2Morphism, GenError> {
        match self.below(3) {
            0 => Ok(self.scalar_a2(e)),
            1 => {
                let f = self.with_halved(|h| h.random_a2_object())?;
                if self.below(2) == 0 {
                    Ok(e.direct_sum(&f).inclusions[0].clone())
                } else {
                    Ok(f.direct_sum(e).inclusions[1].clone())
                }
            }
            _ => {
                let k = self.random_matrix(2, 1);
                Ok(block_scalar_a2(e, 1, &k))
            }
        }
    }

    pub fn random_a2_composable_pair(&mut self) -> Result<(A2Morphism, A2Morphism), GenError> {
        let f = self.random_a2_morphism()?;
        let g = self.random_a2_morphism_from(f.target())?;
        Ok((f, g))
    }

    /// Random `(u, v)` with `m, n <= min(max_ambient_dim, 4)`. Half of the
    /// draws plant a fixed vector of `u∘v` so that `1 - u∘v` is singular.
    pub fn random_a1_object(&mut self) -> A1Object {
        let cap = self.cfg.max_ambient_dim.min(4);
        let m = self.below(cap + 1);
        let n = self.below(cap + 1);
        let v = self.random_map(n, m);
        let planted = m > 0 && n > 0 && self.below(2) == 0;
        if planted {
            for _ in 0..self.cfg.retry_limit {
                let x = self.random_matrix(m, 1);
                let y = v.matrix().mul(&x).expect("shape");
                if y.is_zero() {
                    continue;
                }
                let u = self.map_sending(&y, &x);
                return A1Object::new(m, n, u, v);
            }
        }
        let u = self.random_map(m, n);
        A1Object::new(m, n, u, v)
    }

    /// A random `u: k^n -> k^m` with `u y = x`, for nonzero `y`.
    fn map_sending(&mut self, y: &Matrix, x: &Matrix) -> LinearMap {
        let n = y.rows();
        let yt = y.transpose();
        let norm = yt.mul(y).expect("shape").get(0, 0).clone();
        let proj = y.mul(&yt).expect("shape").scale(&norm.recip());
        let z = self.random_matrix(x.rows(), n);
        let rest = z
            .mul(&Matrix::identity(n).sub(&proj).expect("shape"))
            .expect("shape");
        let u = x
            .mul(&yt)
            .expect("shape")
            .scale(&norm.recip())
            .add(&rest)
            .expect("shape");
        LinearMap::new(u)
    }
}

/// The C object with `A₁`, `B₁` spanned by the first `k` and the remaining
/// columns of the invertible `basis`, `A₂ = {a + r(a)}` and `B₂ = {b + s(b)}`
/// in those coordinates. `None` when `A₂ ∩ B₂ ≠ 0`.
pub fn c_object_from_graphs(basis: &Matrix, k: usize, r: &Matrix, s: &Matrix) -> Option<CObject> {
    let n = basis.rows();
    let a1 = basis.select_columns(0..k);
    let b1 = basis.select_columns(k..n);
    let a2 = a1.add(&b1.mul(r).ok()?).ok()?;
    let b2 = b1.add(&a1.mul(s).ok()?).ok()?;
    let (a2, b2) = (Subspace::span(&a2), Subspace::span(&b2));
    if !a2.is_direct_sum(&b2).ok()? {
        return None;
    }
    let x = CObject::new(n, Subspace::span(&a1), a2, Subspace::span(&b1), b2);
    debug_assert!(x.is_valid());
    Some(x)
}

/// Transports `e` along invertible `q = [q₋, q₀, q₊]`:
/// `δ ↦ q₀ δ q⁻¹`, `γ ↦ q γ q₀⁻¹`.
pub fn conjugate_a2_object(e: &A2Object, q: &[LinearMap; 3]) -> Result<A2Object, LinalgError> {
    let inv = [q[0].inverse()?, q[1].inverse()?, q[2].inverse()?];
    Ok(A2Object::new(
        q[1].compose(e.delta_minus())?.compose(&inv[0])?,
        q[0].compose(e.gamma_minus())?.compose(&inv[1])?,
        q[1].compose(e.delta_plus())?.compose(&inv[2])?,
        q[2].compose(e.gamma_plus())?.compose(&inv[1])?,
    ))
}

/// Transports `f` to the conjugated endpoints: component `k` becomes
/// `target_q[k] ∘ f_k ∘ source_q[k]⁻¹`.
pub fn conjugate_a2_morphism(
    f: &A2Morphism,
    source_q: &[LinearMap; 3],
    target_q: &[LinearMap; 3],
) -> Result<A2Morphism, LinalgError> {
    let mut parts = Vec::with_capacity(3);
    for (k, component) in f.components().into_iter().enumerate() {
        parts.push(
            target_q[k]
                .compose(component)?
                .compose(&source_q[k].inverse()?)?,
        );
    }
    let [m, z, p]: [LinearMap; 3] = parts.try_into().expect("three components");
    Ok(A2Morphism::new(
        conjugate_a2_object(f.source(), source_q)?,
        conjugate_a2_object(f.target(), target_q)?,
        m,
        z,
        p,
    ))
}

/// `K ⊗ 1_n`: block `(i, j)` is `K[i][j]` times the identity.
fn kron_identity(k: &Matrix, n: usize) -> Matrix {
    let mut out = Matrix::zeros(k.rows() * n, k.cols() * n);
    for i in 0..k.rows() {
        for j in 0..k.cols() {
            for d in 0..n {
                out.set(i * n + d, j * n + d, k.get(i, j).clone());
            }
        }
    }
    out
}

pub fn power_c(x: &CObject, copies: usize) -> CObject {
    (1..copies).fold(
        if copies == 0 {
            CObject::zero()
        } else {
            x.clone()
        },
        |acc, _| acc.direct_sum(x).sum,
    )
}

pub fn power_a2(e: &A2Object, copies: usize) -> A2Object {
    (1..copies).fold(
        if copies == 0 {
            A2Object::zero()
        } else {
            e.clone()
        },
        |acc, _| acc.direct_sum(e).sum,
    )
}

/// The morphism `x^{⊕s} -> x^{⊕r}` given by `K ⊗ 1` for an `r x s` matrix `K`.
pub fn block_scalar_c(x: &CObject, copies: usize, k: &Matrix) -> CMorphism {
    assert_eq!(k.cols(), copies);
    let map = kron_identity(k, x.ambient_dim());
    CMorphism::new(
        power_c(x, k.cols()),
        power_c(x, k.rows()),
        LinearMap::new(map),
    )
}

pub fn block_scalar_a2(e: &A2Object, copies: usize, k: &Matrix) -> A2Morphism {
    assert_eq!(k.cols(), copies);
    let [m, z, p] = e.dims().map(|n| LinearMap::new(kron_identity(k, n)));
    A2Morphism::new(power_a2(e, k.cols()), power_a2(e, k.rows()), m, z, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn generator(seed: u64) -> Generator {
        Generator::new(GenConfig::new(seed)).unwrap()
    }

    #[test]
    fn invertible_construction() {
        let mut g = generator(7);
        assert_eq!(g.random_invertible(0), LinearMap::identity(0));
        for n in 0..6 {
            let q = g.random_invertible(n);
            assert!(q.is_invertible());
        }
        assert_eq!(
            generator(9).random_invertible(5),
            generator(9).random_invertible(5)
        );
    }

    #[test]
    fn aligned_graphs() {
        let basis = Matrix::identity(3);
        let x =
            c_object_from_graphs(&basis, 1, &Matrix::zeros(2, 1), &Matrix::zeros(1, 2)).unwrap();
        assert_eq!(x.a1(), x.a2());
        assert_eq!(x.b1(), x.b2());
        assert!(x.is_valid());
    }

    #[test]
    fn colliding_graphs_are_rejected() {
        let one = Matrix::from_ints(1, 1, &[1]);
        assert!(c_object_from_graphs(&Matrix::identity(2), 1, &one, &one).is_none());
        let two = Matrix::from_ints(1, 1, &[2]);
        assert!(c_object_from_graphs(&Matrix::identity(2), 1, &one, &two).is_some());
    }

    #[test]
    fn conjugation_by_identity_is_trivial() {
        let mut g = generator(3);
        let x = g.random_c_object_with_dims(4, 2).unwrap();
        let e = s_on_object(&x).unwrap();
        let q = e.dims().map(LinearMap::identity);
        assert_eq!(conjugate_a2_object(&e, &q).unwrap(), e);
    }

    #[test]
    fn objects_validate() {
        let mut g = generator(11);
        for _ in 0..40 {
            assert!(g.random_c_object().unwrap().is_valid());
            assert!(g.random_a2_object().unwrap().is_valid());
        }
    }

    #[test]
    fn morphisms_validate() {
        let mut g = generator(5);
        for _ in 0..30 {
            let f = g.random_c_morphism().unwrap();
            assert_eq!(f.validate(), vec![]);
            let h = g.random_a2_morphism().unwrap();
            assert_eq!(h.validate(), vec![]);
            let (f, g2) = g.random_c_composable_pair().unwrap();
            assert!(g2.compose(&f).unwrap().is_valid());
        }
    }

    #[test]
    fn block_scalars_validate() {
        let mut g = generator(13);
        let x = g.random_c_object_with_dims(3, 1).unwrap();
        let k = Matrix::from_ints(3, 2, &[1, -2, 0, 3, 2, 2]);
        assert!(block_scalar_c(&x, 2, &k).is_valid());
        let e = g.random_a2_object().unwrap();
        assert!(block_scalar_a2(&e, 2, &k).is_valid());
    }

    #[test]
    fn determinism() {
        let cfg = GenConfig::new(42);
        let a: Vec<_> = (0..5)
            .map(|i| {
                Generator::for_sample(&cfg, i)
                    .unwrap()
                    .random_a2_object()
                    .unwrap()
            })
            .collect();
        let b: Vec<_> = (0..5)
            .map(|i| {
                Generator::for_sample(&cfg, i)
                    .unwrap()
                    .random_a2_object()
                    .unwrap()
            })
            .collect();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn split_coverage() {
        let mut g = generator(42);
        let mut seen = BTreeSet::new();
        for _ in 0..500 {
            let x = g.random_c_object().unwrap();
            seen.insert((x.ambient_dim(), x.a1().dim()));
        }
        for n in 0..=6 {
            for k in 0..=n {
                assert!(seen.contains(&(n, k)), "split ({n}, {k}) never drawn");
            }
        }
    }

    #[test]
    fn planted_a1_objects_are_singular() {
        let mut g = generator(17);
        let verdicts: BTreeSet<bool> = (0..100).map(|_| g.random_a1_object().is_valid()).collect();
        assert_eq!(verdicts.len(), 2, "both verdicts should occur");
    }

    #[test]
    fn config_checks() {
        let cfg = GenConfig {
            retry_limit: 0,
            ..GenConfig::default()
        };
        assert!(matches!(
            Generator::new(cfg),
            Err(GenError::InvalidConfig(_))
        ));
    }
}
