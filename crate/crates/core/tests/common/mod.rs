//! Oracles that share no code path with the library's elimination routines.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use perv_disc::exactlin::{Matrix, Rational};

/// Rank of an integer matrix by division-free elimination, rows rescaled by
/// their gcd to keep entries small.
pub fn integer_rank(rows: usize, cols: usize, values: &[i64]) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigInt::from(values[i * cols + j]))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let (a, b) = (m[rank][col].clone(), m[i][col].clone());
            let pivot_row = m[rank].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * p;
            }
            let g = m[i].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() {
                for x in m[i].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &Matrix) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    let grid: Vec<Vec<Rational>> = m.row_vecs();
    fn expand(grid: &[Vec<Rational>], cols: &[usize]) -> Rational {
        if cols.is_empty() {
            return Rational::one();
        }
        let row = grid.len() - cols.len();
        let mut total = Rational::zero();
        for (k, &c) in cols.iter().enumerate() {
            let entry = &grid[row][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &expand(grid, &rest);
            total = if k % 2 == 0 {
                total + term
            } else {
                total - term
            };
        }
        total
    }
    expand(&grid, &(0..n).collect::<Vec<_>>())
}

pub fn to_ints(m: &Matrix) -> Option<Vec<i64>> {
    m.entries()
        .iter()
        .map(|q| {
            if q.is_integer() && q.numer().abs() < BigInt::from(i64::MAX) {
                i64::try_from(q.numer().clone()).ok()
            } else {
                None
            }
        })
        .collect()
}

#[test]
fn oracles_sanity() {
    assert_eq!(integer_rank(2, 2, &[1, 2, 2, 4]), 1);
    assert_eq!(integer_rank(3, 3, &[0, 0, 1, 0, 1, 0, 1, 0, 0]), 3);
    assert_eq!(integer_rank(0, 3, &[]), 0);
    assert_eq!(
        determinant(&Matrix::from_ints(2, 2, &[1, 2, 3, 4])),
        Rational::from(-2)
    );
    assert_eq!(determinant(&Matrix::identity(0)), Rational::one());
    assert_eq!(
        determinant(&Matrix::from_ints(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2])),
        Rational::from(6)
    );
}
