use super::{LinalgError, Matrix, Rational, Subspace};

/// A linear map `k^domain_dim -> k^codomain_dim`, stored as its
/// `codomain_dim x domain_dim` matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(codomain_dim: usize, domain_dim: usize) -> Self {
        LinearMap::new(Matrix::zeros(codomain_dim, domain_dim))
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        LinearMap::new(Matrix::scalar(n, c))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.matrix.mul(&inner.matrix).map(LinearMap::new)
    }

    pub fn add(&self, rhs: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.matrix.add(&rhs.matrix).map(LinearMap::new)
    }

    pub fn sub(&self, rhs: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.matrix.sub(&rhs.matrix).map(LinearMap::new)
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }

    pub fn direct_sum(&self, rhs: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.block_diag(&rhs.matrix))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_square() && self.matrix == Matrix::identity(self.matrix.rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_square() && self.rank() == self.matrix.rows()
    }

    pub fn inverse(&self) -> Result<LinearMap, LinalgError> {
        self.matrix.inverse().map(LinearMap::new)
    }

    pub fn kernel_basis(&self) -> Subspace {
        Subspace::span(&self.matrix.null_space())
    }

    pub fn image_basis(&self) -> Subspace {
        Subspace::span(&self.matrix)
    }

    /// The composite `self ∘ inclusion(s)`.
    pub fn restrict(&self, s: &Subspace) -> Result<LinearMap, LinalgError> {
        self.matrix.mul(s.basis()).map(LinearMap::new)
    }
}

impl From<Matrix> for LinearMap {
    fn from(matrix: Matrix) -> Self {
        LinearMap::new(matrix)
    }
}
