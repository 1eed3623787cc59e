//! Small dense matrices over a [`Scalar`], with Gauss–Jordan elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vec<S>]) -> Self {
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                acc + self[(r, k)].clone() * rhs[(k, c)].clone()
            })
        })
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(S::zero(), |acc, k| acc + self[(r, k)].clone() * v[k].clone())
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + rhs[(r, c)].clone())
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - rhs[(r, c)].clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| s.clone() * self[(r, c)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Solve `self · X = rhs`; `self` must be square and invertible.
    pub fn solve(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.rows != self.cols || rhs.rows != self.rows {
            return Err(Error::Invalid("solve: shape mismatch".into()));
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            // partial pivoting by magnitude; for exact scalars any nonzero pivot works
            let pivot = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .max_by(|&x, &y| {
                    a[(x, col)]
                        .abs_sq_f64()
                        .partial_cmp(&a[(y, col)].abs_sq_f64())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .ok_or(Error::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                b.swap_rows(pivot, col);
            }
            let inv = a[(col, col)].inv().ok_or(Error::Singular)?;
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() * inv.clone();
            }
            for c in 0..m {
                b[(col, c)] = b[(col, c)].clone() * inv.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    a[(r, c)] = a[(r, c)].clone() - factor.clone() * a[(col, c)].clone();
                }
                for c in 0..m {
                    b[(r, c)] = b[(r, c)].clone() - factor.clone() * b[(col, c)].clone();
                }
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<Matrix<S>> {
        self.solve(&Matrix::identity(self.rows))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactC;

    fn q(s: &str) -> ExactC {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_of_a_gaussian_matrix() {
        let m = Matrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => q("1+i"),
            (0, 1) => q("2"),
            (1, 0) => q("-i"),
            _ => q("3"),
        });
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&m), Matrix::identity(2));
    }

    #[test]
    fn singular_is_reported() {
        let m = Matrix::from_fn(2, 2, |_, _| q("1/2"));
        assert_eq!(m.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn adjoint_is_conjugate_transpose() {
        let m = Matrix::from_fn(2, 3, |r, c| ExactC::from_parts(r as i64, 1, c as i64 + 1, 2));
        let a = m.adjoint();
        assert_eq!((a.rows(), a.cols()), (3, 2));
        assert_eq!(a[(2, 1)], m[(1, 2)].conj());
        assert_eq!(a.adjoint(), m);
    }
}
