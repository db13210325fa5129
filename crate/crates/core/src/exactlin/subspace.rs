use super::{LinalgError, LinearMap, Matrix};

/// A subspace of `k^ambient_dim`, represented by the reduced column echelon
/// form of any spanning set. Two subspaces are equal iff their data are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Column span of `generators` inside `k^generators.rows()`.
    pub fn span(generators: &Matrix) -> Self {
        let (basis, _) = generators.rcef();
        Subspace {
            ambient_dim: generators.rows(),
            basis,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one column per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// The inclusion `k^dim -> k^ambient_dim` in canonical coordinates.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::new(self.basis.clone())
    }

    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.block_diag(&other.basis))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::span(&self.basis.hcat(&other.basis)?))
    }

    /// Solves `basis_self * x = basis_other * y` through the kernel of
    /// `[basis_self | -basis_other]`, then maps the `x` block back through
    /// `basis_self`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let joined = self.basis.hcat(&other.basis.neg())?;
        let kernel = joined.null_space();
        let coords = kernel.select_rows(0..self.dim());
        Ok(Subspace::span(&self.basis.mul(&coords)?))
    }

    pub fn is_direct_sum(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.dim() + other.dim() == self.ambient_dim && self.intersection(other)?.dim() == 0)
    }

    /// Projection onto `self` with kernel `complement`, landing in the
    /// canonical coordinates of `self`.
    pub fn projection_along(&self, complement: &Subspace) -> Result<LinearMap, LinalgError> {
        if !self.is_direct_sum(complement)? {
            return Err(LinalgError::NotDirectSum);
        }
        let inverse = self.basis.hcat(&complement.basis)?.inverse()?;
        Ok(LinearMap::new(inverse.select_rows(0..self.dim())))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.basis.solve(&other.basis)?.is_some())
    }

    /// Whether the image of `f` lies in `self`.
    pub fn contains_image(&self, f: &LinearMap) -> Result<bool, LinalgError> {
        Ok(self.basis.solve(f.matrix())?.is_some())
    }

    /// The unique `g` with `inclusion ∘ g = f`, for `f` landing in `self`.
    pub fn coordinates_of(&self, f: &LinearMap) -> Result<LinearMap, LinalgError> {
        match self.basis.solve(f.matrix())? {
            Some(g) => Ok(LinearMap::new(g)),
            None => Err(LinalgError::NotContained),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn span(rows: usize, cols: usize, v: &[i64]) -> Subspace {
        Subspace::span(&Matrix::from_ints(rows, cols, v))
    }

    #[test]
    fn sum_examples() {
        let e1 = span(2, 1, &[1, 0]);
        let e2 = span(2, 1, &[0, 1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        // rank of [(1,0,0) | (1,1,0)] is 2, and both vectors have z = 0.
        let s = span(3, 1, &[1, 0, 0]).sum(&span(3, 1, &[1, 1, 0])).unwrap();
        assert_eq!(s, span(3, 2, &[1, 0, 0, 1, 0, 0]));
        assert!(matches!(
            e1.sum(&Subspace::zero(3)),
            Err(LinalgError::AmbientMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn intersection_examples() {
        let diag = span(2, 1, &[1, 1]);
        assert_eq!(Subspace::full(2).intersection(&diag).unwrap(), diag);
        let e1 = span(2, 1, &[1, 0]);
        let e2 = span(2, 1, &[0, 1]);
        assert_eq!(e1.intersection(&e2).unwrap(), Subspace::zero(2));
        let p = span(3, 2, &[1, 0, 0, 1, 0, 0]);
        let q = span(3, 2, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(p.intersection(&q).unwrap(), span(3, 1, &[1, 0, 0]));
    }

    #[test]
    fn direct_sum_examples() {
        let e1 = span(2, 1, &[1, 0]);
        let e2 = span(2, 1, &[0, 1]);
        assert!(e1.is_direct_sum(&e2).unwrap());
        assert!(!e1.is_direct_sum(&e1).unwrap());
        // det [[1,1],[1,-1]] = -2 != 0
        assert!(span(2, 1, &[1, 1])
            .is_direct_sum(&span(2, 1, &[1, -1]))
            .unwrap());
        assert!(!e1.is_direct_sum(&Subspace::zero(2)).unwrap());
        assert!(Subspace::zero(0).is_direct_sum(&Subspace::zero(0)).unwrap());
    }

    #[test]
    fn projection_examples() {
        let e1 = span(2, 1, &[1, 0]);
        let e2 = span(2, 1, &[0, 1]);
        assert_eq!(
            e1.projection_along(&e2).unwrap().matrix(),
            &Matrix::from_ints(1, 2, &[1, 0])
        );
        // a(1,1) + b(1,-1) = (x,y) gives a = (x+y)/2.
        let p = span(2, 1, &[1, 1])
            .projection_along(&span(2, 1, &[1, -1]))
            .unwrap();
        let half = Rational::new(1, 2);
        assert_eq!(
            p.matrix(),
            &Matrix::from_rows(2, vec![vec![half.clone(), half]]).unwrap()
        );
        let full = Subspace::full(2);
        assert_eq!(
            full.projection_along(&Subspace::zero(2)).unwrap(),
            LinearMap::identity(2)
        );
        assert_eq!(e1.projection_along(&e1), Err(LinalgError::NotDirectSum));
    }

    #[test]
    fn contains_examples() {
        let diag = span(2, 1, &[1, 1]);
        assert!(Subspace::full(2).contains(&diag).unwrap());
        assert!(!span(2, 1, &[1, 0]).contains(&diag).unwrap());
        // 2*(1,0,0) + 3*(0,1,0) = (2,3,0)
        let plane = span(3, 2, &[1, 0, 0, 1, 0, 0]);
        assert!(plane.contains(&span(3, 1, &[2, 3, 0])).unwrap());
        assert!(plane.contains(&Subspace::zero(3)).unwrap());
    }

    #[test]
    fn coordinates_examples() {
        let diag = span(2, 1, &[1, 1]);
        let f = LinearMap::new(Matrix::from_ints(2, 1, &[2, 2]));
        assert_eq!(
            diag.coordinates_of(&f).unwrap().matrix(),
            &Matrix::from_ints(1, 1, &[2])
        );

        let g = LinearMap::new(Matrix::from_ints(2, 3, &[1, -2, 0, 5, 1, 7]));
        assert_eq!(Subspace::full(2).coordinates_of(&g).unwrap(), g);

        // span{(1,0),(1,1)} canonicalizes to the identity basis, so the
        // coordinates of (3,1) are (3,1).
        let s = span(2, 2, &[1, 1, 0, 1]);
        let h = LinearMap::new(Matrix::from_ints(2, 1, &[3, 1]));
        let c = s.coordinates_of(&h).unwrap();
        assert_eq!(c.matrix(), &Matrix::from_ints(2, 1, &[3, 1]));
        assert_eq!(s.inclusion().compose(&c).unwrap(), h);

        let e1 = span(2, 1, &[1, 0]);
        assert_eq!(e1.coordinates_of(&f), Err(LinalgError::NotContained));
    }
}
