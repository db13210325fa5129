use std::fmt;
use std::ops::Range;

use super::{LinalgError, Rational};

/// Dense row-major matrix of exact rationals. Zero-row and zero-column
/// shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds a matrix with `cols` columns from a list of rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix with `rows` rows from a list of columns.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        Ok(Matrix::from_rows(rows, columns)?.transpose())
    }

    /// Convenience constructor from small integers, row-major.
    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count");
        Matrix {
            rows,
            cols,
            entries: values.iter().map(|&v| Rational::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "multiply",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Matrix, LinalgError> {
        if self.shape() != rhs.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Rational::from(-1))
    }

    /// `[self | rhs]`
    pub fn hcat(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hcat",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let cols = self.cols + rhs.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(rhs.row(i));
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            entries,
        })
    }

    /// `self` stacked on top of `rhs`.
    pub fn vcat(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vcat",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Ok(Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, range: Range<usize>) -> Matrix {
        let rows = range.len();
        Matrix {
            rows,
            cols: self.cols,
            entries: self.entries[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    pub fn select_columns(&self, range: Range<usize>) -> Matrix {
        let cols = range.len();
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.row(i)[range.clone()]);
        }
        Matrix {
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Reduced row echelon form together with the pivot columns. Pivots are
    /// chosen as the first nonzero entry scanning top to bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).recip();
            for j in col..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(pivot_row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced column echelon form: the canonical basis of the column span,
    /// returned with exactly `rank` columns.
    pub fn rcef(&self) -> (Matrix, usize) {
        let (r, pivots) = self.transpose().rref();
        let rank = pivots.len();
        (r.select_rows(0..rank).transpose(), rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}` as columns, one per free variable.
    pub fn null_space(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(p, k, -r.get(row, f));
            }
        }
        basis
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    /// Free variables are set to zero, so the answer is unique whenever the
    /// columns of `self` are independent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let (r, pivots) = self.hcat(rhs)?.rref();
        if pivots.last().is_some_and(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (r, pivots) = self.hcat(&Matrix::identity(n))?.rref();
        if pivots.len() < n || pivots.last().is_some_and(|&p| p >= n) {
            return Err(LinalgError::Singular);
        }
        Ok(r.select_columns(n..2 * n))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rcef_identity_and_zero() {
        let (c, r) = Matrix::identity(2).rcef();
        assert_eq!((c, r), (Matrix::identity(2), 2));
        let (c, r) = Matrix::zeros(3, 2).rcef();
        assert_eq!(c.shape(), (3, 0));
        assert_eq!(r, 0);
    }

    #[test]
    fn rcef_collapses_parallel_columns() {
        // Hand elimination: (2,2) - 2*(1,1) = 0, leaving the single column (1,1).
        let m = Matrix::from_ints(2, 2, &[1, 2, 1, 2]);
        let (c, r) = m.rcef();
        assert_eq!(r, 1);
        assert_eq!(c, Matrix::from_ints(2, 1, &[1, 1]));
    }

    #[test]
    fn rcef_scales_pivot_to_one() {
        let m = Matrix::from_ints(3, 2, &[2, 0, 4, 3, 0, 6]);
        let (c, r) = m.rcef();
        assert_eq!(r, 2);
        // columns (2,4,0),(0,3,6): pivots at rows 0 and 1.
        let expected = Matrix::from_rows(
            2,
            vec![
                vec![Rational::one(), Rational::zero()],
                vec![Rational::zero(), Rational::one()],
                vec![Rational::from(-4), Rational::from(2)],
            ],
        )
        .unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn shapes_with_zero_extent() {
        let a = Matrix::zeros(0, 3);
        let b = Matrix::zeros(3, 2);
        assert_eq!(a.mul(&b).unwrap().shape(), (0, 2));
        let c = Matrix::zeros(2, 0);
        let d = Matrix::zeros(0, 4);
        let p = c.mul(&d).unwrap();
        assert_eq!(p, Matrix::zeros(2, 4));
        assert_eq!(Matrix::identity(0).inverse().unwrap(), Matrix::identity(0));
        assert_eq!(Matrix::zeros(0, 3).null_space(), Matrix::identity(3));
    }

    #[test]
    fn mul_rejects_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(
            a.mul(&a),
            Err(LinalgError::DimensionMismatch { op: "multiply", .. })
        ));
    }

    #[test]
    fn inverse_and_singular() {
        let half = Matrix::from_rows(1, vec![vec![Rational::new(1, 2)]]).unwrap();
        assert_eq!(half.inverse().unwrap(), Matrix::from_ints(1, 1, &[2]));
        let repeated = Matrix::from_ints(4, 4, &[1, 2, 1, 0, 3, 1, 3, 5, 0, 7, 0, 1, 2, 2, 2, 9]);
        assert_eq!(repeated.inverse(), Err(LinalgError::Singular));
        assert!(matches!(
            Matrix::zeros(2, 3).inverse(),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_ints(3, 2, &[1, 0, 0, 1, 0, 0]);
        let b = Matrix::from_ints(3, 1, &[2, 3, 0]);
        assert_eq!(a.solve(&b).unwrap(), Some(Matrix::from_ints(2, 1, &[2, 3])));
        let c = Matrix::from_ints(3, 1, &[2, 3, 1]);
        assert_eq!(a.solve(&c).unwrap(), None);
    }

    #[test]
    fn null_space_of_row_sum() {
        let a = Matrix::from_ints(1, 2, &[1, 1]);
        assert_eq!(a.null_space(), Matrix::from_ints(2, 1, &[-1, 1]));
    }
}
